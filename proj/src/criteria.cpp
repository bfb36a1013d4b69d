#include "grasscohom/criteria.hpp"

#include <stdexcept>

namespace grc {

std::string describe(const CriterionGroup& g)
{
    std::string out = "H^" + std::to_string(g.degree) + (g.all_twists ? "_*" : "") + "(E";
    if (g.sym_power == 1)
        out += " (x) Q";
    else if (g.sym_power > 1)
        out += " (x) S^" + std::to_string(g.sym_power) + "Q";
    if (!g.all_twists && g.twist != 0)
        out += "(" + std::to_string(g.twist) + ")";
    return out + ")";
}

std::string sym_factor_name(int sym_power)
{
    if (sym_power == 0)
        return "O";
    if (sym_power == 1)
        return "Q";
    return "S^" + std::to_string(sym_power) + "Q";
}

const ConditionResult* CriterionReport::find(const std::string& label) const
{
    for (const auto& c : conditions)
        if (c.label == label)
            return &c;
    return nullptr;
}

namespace {

CriterionGroup fixed(int degree, int sym_power, int twist) { return {degree, sym_power, twist, false}; }
CriterionGroup star(int degree, int sym_power) { return {degree, sym_power, 0, true}; }

void push(std::vector<ConditionSpec>& out, std::string label, std::vector<CriterionGroup> groups,
          bool nonvanishing = false)
{
    if (groups.empty() && !nonvanishing)
        return;
    out.push_back({std::move(label), nonvanishing, std::move(groups)});
}

void require_summand_range(int n, int j)
{
    if (n < 3)
        throw std::invalid_argument("summand criteria need n >= 3");
    if (j < 1 || j > n - 2)
        throw std::invalid_argument("j must lie in 1..n-2");
}

IrredSum with_sym_q(const IrredSum& s, int m)
{
    if (m == 0 || s.is_zero())
        return s;
    return tensor(s, IrredSum(sym_q(m, s.n())));
}

} // namespace

std::vector<ConditionSpec> evans_griffith_conditions(int n, int r)
{
    if (r <= 0)
        throw std::invalid_argument("Evans-Griffith criterion needs rank r >= 1");
    std::vector<ConditionSpec> out;
    std::vector<CriterionGroup> first;
    for (int m = 1; m <= n - 2; ++m)
        first.push_back(star(m, m));
    push(out, "i", first);

    const int i0 = (2 * n - 2) / (r + 1);
    std::vector<CriterionGroup> second;
    for (int m = n - 2; m >= std::max(i0, 0); --m)
        second.push_back(star(2 * n - 3 - m, m));
    push(out, "ii", second);
    return out;
}

std::vector<ConditionSpec> wedge_summand_conditions(int n, int j)
{
    require_summand_range(n, j);
    std::vector<ConditionSpec> out;
    push(out, "i", {fixed(n - 1 - j, n - 1 - j, -n + j)}, true);

    std::vector<CriterionGroup> g;
    for (int p = 1; p <= n - 1 - j; ++p)
        g.push_back(fixed(p, p - 1, -p));
    push(out, "ii", g);

    g.clear();
    for (int q = 0; q <= n - 2 - j; ++q)
        g.push_back(fixed(n - 1 - j + q, n - 2 - j - q, -n + j));
    push(out, "iii", g);

    g.clear();
    for (int q = 0; q <= j - 1; ++q)
        g.push_back(fixed(2 * n - 2 - 2 * j + q, q, -n - 1 + j - q));
    push(out, "iv", g);

    g.clear();
    for (int q = 0; q <= j - 1; ++q)
        g.push_back(fixed(2 * n - 2 - j + q, j - 1 - q, -n - 1));
    push(out, "v", g);
    return out;
}

std::vector<ConditionSpec> sym_summand_conditions(int n, int j)
{
    require_summand_range(n, j);
    std::vector<ConditionSpec> out;
    push(out, "i", {fixed(n - 1, n - 1 - j, -n)}, true);

    std::vector<CriterionGroup> g;
    for (int q = 1; q <= j; ++q)
        g.push_back(fixed(q, j - q, -j));
    push(out, "ii", g);

    g.clear();
    for (int q = 0; q <= n - 2 - j; ++q)
        g.push_back(fixed(j + 1 + q, q, -j - 1 - q));
    push(out, "iii", g);

    g.clear();
    for (int q = 0; q <= n - 2 - j; ++q)
        g.push_back(fixed(n - 1 + q, n - 2 - j - q, -n));
    push(out, "iv", g);

    g.clear();
    for (int q = 0; q <= j - 1; ++q)
        g.push_back(fixed(2 * n - 2 - j + q, q, -n - 1 - q));
    push(out, "v", g);
    return out;
}

std::vector<ConditionSpec> mt_conditions(int n)
{
    if (n < 3)
        throw std::invalid_argument("direct-sum characterization needs n >= 3");
    std::vector<ConditionSpec> out;

    std::vector<CriterionGroup> g;
    for (int p = 1; p <= n - 2; ++p)
        g.push_back(star(p, p - 1));
    push(out, "a", g);

    g.clear();
    for (int q = 0; q <= n - 3; ++q)
        g.push_back(star(n + q, n - 3 - q));
    push(out, "b", g);

    for (int j = 1; j <= n - 2; ++j) {
        g.clear();
        for (int q = 0; q <= n - 2 - j; ++q)
            g.push_back(star(n - 1 - j + q, n - 2 - j - q));
        for (int q = 0; q <= j - 1; ++q)
            g.push_back(star(2 * n - 2 - 2 * j + q, q));
        push(out, "c(j=" + std::to_string(j) + ")", g);
    }

    // The printed chain has a displaced subscript in its second half; it is
    // read as H^{n+q}_*(E (x) S^{n-4-q} Q).
    g.clear();
    for (int p = 2; p <= n - 1; ++p)
        g.push_back(star(p, p - 2));
    for (int q = 0; q <= n - 4; ++q)
        g.push_back(star(n + q, n - 4 - q));
    push(out, "d, as interpreted", g);
    return out;
}

CriterionReport evaluate_conditions(const std::string& theorem, const std::vector<ConditionSpec>& specs,
                                    const IrredSum& s, int extra_twist)
{
    CriterionReport rep;
    rep.theorem = theorem;
    for (const auto& spec : specs) {
        ConditionResult res;
        res.label = spec.label;
        if (spec.nonvanishing) {
            const auto& g = spec.groups.front();
            const int t = g.twist + extra_twist;
            BigInt d = h(twist(with_sym_q(s, g.sym_power), t), g.degree);
            res.satisfied = d != 0;
            res.witnesses.push_back({g.degree, t, g.sym_power, d, sym_factor_name(g.sym_power)});
        } else {
            for (const auto& g : spec.groups) {
                const IrredSum f = with_sym_q(s, g.sym_power);
                if (g.all_twists) {
                    const TwistSet ts = hstar_nonzero(f, g.degree);
                    for (int k : ts.finite)
                        res.witnesses.push_back({g.degree, k, g.sym_power, h(twist(f, k), g.degree), sym_factor_name(g.sym_power)});
                    if (ts.all_from)
                        res.witnesses.push_back({g.degree, *ts.all_from, g.sym_power, h(twist(f, *ts.all_from), g.degree), sym_factor_name(g.sym_power)});
                    if (ts.all_upto)
                        res.witnesses.push_back({g.degree, *ts.all_upto, g.sym_power, h(twist(f, *ts.all_upto), g.degree), sym_factor_name(g.sym_power)});
                } else {
                    const int t = g.twist + extra_twist;
                    BigInt d = h(twist(f, t), g.degree);
                    if (d != 0)
                        res.witnesses.push_back({g.degree, t, g.sym_power, d, sym_factor_name(g.sym_power)});
                }
            }
            res.satisfied = res.witnesses.empty();
        }
        rep.verdict = rep.verdict && res.satisfied;
        rep.conditions.push_back(std::move(res));
    }
    return rep;
}

CriterionReport check_evans_griffith(const IrredSum& s, std::optional<int> r_override)
{
    long r = 0;
    if (r_override) {
        r = *r_override;
    } else {
        const BigInt rk = rank(s);
        if (!rk.fits_sint_p())
            throw std::invalid_argument("rank too large");
        r = rk.get_si();
    }
    if (r <= 0)
        throw std::invalid_argument("Evans-Griffith criterion needs rank r >= 1");
    return evaluate_conditions("evans-griffith", evans_griffith_conditions(s.n(), static_cast<int>(r)), s);
}

CriterionReport check_wedge_summand(const IrredSum& s, int j)
{
    return evaluate_conditions("wedge-summand", wedge_summand_conditions(s.n(), j), s);
}

CriterionReport check_sym_summand(const IrredSum& s, int j)
{
    return evaluate_conditions("sym-summand", sym_summand_conditions(s.n(), j), s);
}

CriterionReport check_mt(const IrredSum& s)
{
    return evaluate_conditions("direct-sum", mt_conditions(s.n()), s);
}

CriterionReport check_q_regular(const IrredSum& s)
{
    const QRegularityReport q = is_q_regular_n3(s);
    CriterionReport rep;
    rep.theorem = "qregular";
    static const int degrees[] = {1, 2, 3, 4, 4};
    static const int twists[] = {-1, -2, -3, -4, -4};
    for (std::size_t i = 0; i < q.groups.size(); ++i) {
        ConditionResult res;
        res.label = q.groups[i].first;
        res.satisfied = q.groups[i].second == 0;
        if (!res.satisfied)
            res.witnesses.push_back({degrees[i], twists[i], i == 4 ? -1 : (i == 3 ? 1 : 0), q.groups[i].second,
                                     i == 4 ? "S" : sym_factor_name(i == 3 ? 1 : 0)});
        rep.verdict = rep.verdict && res.satisfied;
        rep.conditions.push_back(std::move(res));
    }
    return rep;
}

} // namespace grc
