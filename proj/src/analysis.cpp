#include "grasscohom/analysis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace grc {

BigInt CohomRecord::euler_characteristic() const
{
    BigInt chi = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i % 2 == 0)
            chi += degrees[i].dim;
        else
            chi -= degrees[i].dim;
    }
    return chi;
}

CohomRecord cohomology(const IrredSum& s)
{
    CohomRecord rec;
    rec.n = s.n();
    rec.degrees.resize(static_cast<std::size_t>(2 * s.n() - 1));
    for (const auto& [x, m] : s) {
        auto r = bott(x);
        if (!r)
            continue;
        auto& slot = rec.degrees[static_cast<std::size_t>(r->degree)];
        slot.modules.add(r->lambda, m);
        slot.dim += m * r->dim;
    }
    return rec;
}

BigInt h(const IrredSum& s, int degree)
{
    BigInt total = 0;
    for (const auto& [x, m] : s)
        total += m * h(x, degree);
    return total;
}

BigInt euler_characteristic(const IrredSum& s)
{
    return cohomology(s).euler_characteristic();
}

TwistWindow vanishing_window(const IrredSum& s)
{
    if (s.is_zero())
        throw std::invalid_argument("vanishing_window: zero bundle");
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [x, m] : s) {
        hi = std::max(hi, x.beta.front() - x.alpha.back());
        lo = std::min(lo, x.beta.back() - x.alpha.front() - x.n - 1);
    }
    return {lo, hi};
}

bool TwistSet::contains(int k) const
{
    if (all_from && k >= *all_from)
        return true;
    if (all_upto && k <= *all_upto)
        return true;
    return std::find(finite.begin(), finite.end(), k) != finite.end();
}

TwistSet hstar_nonzero(const IrredSum& s, int degree)
{
    const int top = 2 * s.n() - 2;
    if (degree < 0 || degree > top)
        throw std::invalid_argument("hstar_nonzero: degree out of range");
    TwistSet out;
    if (s.is_zero())
        return out;
    const auto [lo, hi] = vanishing_window(s);
    std::vector<int> nonzero;
    for (int k = lo; k <= hi; ++k)
        if (h(twist(s, k), degree) != 0)
            nonzero.push_back(k);

    if (degree == 0) {
        // h^0(s(k)) > 0 for every k >= hi.
        int t = hi;
        while (!nonzero.empty() && nonzero.back() >= t)
            nonzero.pop_back();
        while (!nonzero.empty() && nonzero.back() == t - 1) {
            nonzero.pop_back();
            --t;
        }
        out.all_from = t;
    } else if (degree == top) {
        int t = lo;
        std::reverse(nonzero.begin(), nonzero.end());
        while (!nonzero.empty() && nonzero.back() <= t)
            nonzero.pop_back();
        while (!nonzero.empty() && nonzero.back() == t + 1) {
            nonzero.pop_back();
            ++t;
        }
        std::reverse(nonzero.begin(), nonzero.end());
        out.all_upto = t;
    }
    out.finite = std::move(nonzero);
    return out;
}

IntermediateReport has_intermediate_cohomology(const IrredSum& s)
{
    IntermediateReport rep;
    if (s.is_zero())
        return rep;
    const auto [lo, hi] = vanishing_window(s);
    const int top = 2 * s.n() - 2;
    for (int k = lo; k <= hi; ++k) {
        const CohomRecord rec = cohomology(twist(s, k));
        for (int d = 1; d < top; ++d)
            if (rec.dim(d) != 0)
                rep.witnesses.push_back({d, k, rec.dim(d)});
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end(),
              [](const CohomWitness& a, const CohomWitness& b) {
                  return std::pair(a.degree, a.twist) < std::pair(b.degree, b.twist);
              });
    rep.present = !rep.witnesses.empty();
    return rep;
}

std::vector<RegularityCondition> g_regularity_conditions(int n)
{
    std::vector<RegularityCondition> out;
    for (int i = 1; i <= n - 2; ++i)
        out.push_back({"i", i, i, -i});
    for (int t = 0; t <= n - 2; ++t)
        out.push_back({"ii", n - 1 + t, n - 2 - t, -n + 1});
    out.push_back({"iii", 2 * n - 2, 0, -n});
    return out;
}

namespace {

IrredSum with_sym_q(const IrredSum& s, int m)
{
    if (m == 0)
        return s;
    return tensor(s, IrredSum(sym_q(m, s.n())));
}

} // namespace

RegularityReport is_g_regular(const IrredSum& s)
{
    RegularityReport rep;
    if (s.is_zero())
        return rep;
    for (const auto& c : g_regularity_conditions(s.n())) {
        const IrredSum f = with_sym_q(s, c.sym_power);
        const int hi = vanishing_window(f).hi;
        for (int k = 0; k + c.offset <= hi; ++k) {
            const int t = k + c.offset;
            BigInt d = h(twist(f, t), c.degree);
            if (d != 0)
                rep.violations.push_back({c.id, k, c.degree, c.sym_power, t, d});
        }
    }
    rep.verdict = rep.violations.empty();
    return rep;
}

std::optional<int> g_reg(const IrredSum& s)
{
    if (s.is_zero())
        return std::nullopt;
    // Above m_plus every twist the definition inspects lies past the window.
    int m_plus = std::numeric_limits<int>::min();
    for (const auto& c : g_regularity_conditions(s.n()))
        m_plus = std::max(m_plus, vanishing_window(with_sym_q(s, c.sym_power)).hi - c.offset);
    int m = m_plus;
    while (is_g_regular(twist(s, m - 1)).verdict)
        --m;
    return m;
}

QRegularityReport is_q_regular_n3(const IrredSum& s)
{
    if (s.n() != 3)
        throw std::invalid_argument("Qregularity is defined on G(1,3) only");
    QRegularityReport rep;
    const IrredSum q(schur_irred({1}, Generator::Q, 3));
    const IrredSum sub(schur_irred({1}, Generator::S, 3));
    auto add = [&](std::string label, BigInt dim) {
        if (dim != 0)
            rep.verdict = false;
        rep.groups.emplace_back(std::move(label), std::move(dim));
    };
    add("H^1(F(-1))", h(twist(s, -1), 1));
    add("H^2(F(-2))", h(twist(s, -2), 2));
    add("H^3(F(-3))", h(twist(s, -3), 3));
    add("H^4(F*Q(-4))", s.is_zero() ? BigInt(0) : h(twist(tensor(s, q), -4), 4));
    add("H^4(F*S(-4))", s.is_zero() ? BigInt(0) : h(twist(tensor(s, sub), -4), 4));
    return rep;
}

} // namespace grc
