#include "grasscohom/sequences.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace grc {

namespace {

std::string twisted(const std::string& base, int k)
{
    return k == 0 ? base : base + "(" + std::to_string(k) + ")";
}

std::string coefficient_label(int power, bool dual_space)
{
    const std::string v = dual_space ? "V*" : "V";
    if (power == 0)
        return "";
    if (power == 1)
        return v + " (x) ";
    return "wedge^" + std::to_string(power) + "(" + v + ") (x) ";
}

Term sym_term(int n, int power, bool dual_space, int t, int k)
{
    return {binomial(n + 1, power), twist(IrredSum(sym_q(t, n)), k),
            coefficient_label(power, dual_space) + twisted(t == 0 ? "O" : "sym^" + std::to_string(t) + "(Q)", k)};
}

} // namespace

TermList build_Rj(int j, int n)
{
    if (n < 2 || j < 1 || j > n - 1)
        throw std::invalid_argument("R_j needs 1 <= j <= n-1");
    TermList out{"R:" + std::to_string(j), n, {}};
    out.terms.push_back({1, IrredSum(schur_irred(std::vector<int>(static_cast<std::size_t>(j), 1), Generator::SDual, n)),
                         "wedge^" + std::to_string(j) + "(dual(S))"});
    for (int t = 0; t <= j; ++t)
        out.terms.push_back(sym_term(n, j - t, false, t, 0));
    return out;
}

TermList build_Rj_dual(int j, int n)
{
    if (n < 2 || j < 1 || j > n - 1)
        throw std::invalid_argument("Rdual_j needs 1 <= j <= n-1");
    TermList out{"Rdual:" + std::to_string(j), n, {}};
    for (int t = j; t >= 0; --t)
        out.terms.push_back(sym_term(n, j - t, true, t, -t));
    out.terms.push_back({1, IrredSum(schur_irred(std::vector<int>(static_cast<std::size_t>(j), 1), Generator::S, n)),
                         "wedge^" + std::to_string(j) + "(S)"});
    return out;
}

TermList build_koszul(int n)
{
    if (n < 2)
        throw std::invalid_argument("koszul needs n >= 2");
    TermList out{"koszul", n, {}};
    out.terms.push_back({1, IrredSum(Irred::line_bundle(n, -n)), "O(" + std::to_string(-n) + ")"});
    for (int t = 0; t <= n - 2; ++t)
        out.terms.push_back(sym_term(n, n - 1 - t, false, t, -n + 1));
    for (int t = n - 2; t >= 0; --t)
        out.terms.push_back(sym_term(n, n - 1 - t, true, t, -t));
    out.terms.push_back({1, IrredSum(Irred::line_bundle(n, 1)), "O(1)"});
    return out;
}

TermList build_sequence(const std::string& id, int n)
{
    if (id == "koszul")
        return build_koszul(n);
    auto colon = id.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown sequence id '" + id + "'");
    const std::string kind = id.substr(0, colon);
    int j = 0;
    try {
        std::size_t used = 0;
        j = std::stoi(id.substr(colon + 1), &used);
        if (used != id.size() - colon - 1)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad index in sequence id '" + id + "'");
    }
    if (kind == "R")
        return build_Rj(j, n);
    if (kind == "Rdual")
        return build_Rj_dual(j, n);
    throw std::invalid_argument("unknown sequence id '" + id + "'");
}

ChiCheck verify_chi_additivity(const TermList& t, const std::optional<IrredSum>& tensor_by, int twist_by)
{
    ChiCheck out;
    out.chi_sum = 0;
    out.rank_sum = 0;
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
        IrredSum f = t.terms[i].bundle;
        if (tensor_by)
            f = tensor(f, *tensor_by);
        f = twist(f, twist_by);
        BigInt chi = t.terms[i].coefficient * euler_characteristic(f);
        BigInt rk = t.terms[i].coefficient * rank(f);
        if (i % 2 == 0) {
            out.chi_sum += chi;
            out.rank_sum += rk;
        } else {
            out.chi_sum -= chi;
            out.rank_sum -= rk;
        }
        out.chi.push_back(std::move(chi));
        out.ranks.push_back(std::move(rk));
    }
    out.additive = out.chi_sum == 0 && out.rank_sum == 0;
    return out;
}

namespace {

struct LesData {
    std::vector<BigInt> a, b, rmin, rmax;
};

LesData les_data(const IrredSum& a, const IrredSum& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("les_hvec: mixed n");
    const CohomRecord ca = cohomology(a);
    const CohomRecord cb = cohomology(b);
    const std::size_t len = ca.degrees.size();
    LesData d;
    for (std::size_t i = 0; i < len; ++i) {
        d.a.push_back(ca.degrees[i].dim);
        d.b.push_back(cb.degrees[i].dim);
        d.rmin.push_back(0);
        d.rmax.push_back(std::min(d.a[i], d.b[i]));
    }
    if (d.a[0] > d.b[0])
        throw std::invalid_argument("les_hvec: h^0(A) > h^0(B), no injection A -> B exists");
    d.rmin[0] = d.a[0];
    d.rmax[0] = d.a[0];
    return d;
}

} // namespace

std::vector<DimInterval> les_hvec(const IrredSum& a, const IrredSum& b)
{
    const LesData d = les_data(a, b);
    const std::size_t len = d.a.size();
    std::vector<DimInterval> out;
    for (std::size_t i = 0; i < len; ++i) {
        BigInt lo = d.b[i] - d.rmax[i];
        BigInt hi = d.b[i] - d.rmin[i];
        if (i + 1 < len) {
            lo += d.a[i + 1] - d.rmax[i + 1];
            hi += d.a[i + 1] - d.rmin[i + 1];
        }
        out.push_back({lo, hi});
    }
    return out;
}

std::vector<BigInt> les_dims_for_ranks(const IrredSum& a, const IrredSum& b, const std::vector<BigInt>& ranks)
{
    const LesData d = les_data(a, b);
    const std::size_t len = d.a.size();
    if (ranks.size() != len)
        throw std::invalid_argument("les_dims_for_ranks: need one rank per degree");
    for (std::size_t i = 0; i < len; ++i)
        if (ranks[i] < d.rmin[i] || ranks[i] > d.rmax[i])
            throw std::invalid_argument("les_dims_for_ranks: rank outside its admissible box");
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < len; ++i) {
        BigInt v = d.b[i] - ranks[i];
        if (i + 1 < len)
            v += d.a[i + 1] - ranks[i + 1];
        out.push_back(v);
    }
    return out;
}

std::string to_string(TriState t)
{
    switch (t) {
    case TriState::True:
        return "true";
    case TriState::False:
        return "false";
    case TriState::Undetermined:
        return "undetermined";
    }
    return "?";
}

namespace {

IrredSum times_sym_q(const IrredSum& s, int m)
{
    if (m == 0 || s.is_zero())
        return s;
    return tensor(s, IrredSum(sym_q(m, s.n())));
}

// Largest twist at which A' or B' can still carry cohomology in positive degree.
int extension_hi(const IrredSum& a, const IrredSum& b)
{
    int hi = std::numeric_limits<int>::min();
    if (!a.is_zero())
        hi = std::max(hi, vanishing_window(a).hi);
    if (!b.is_zero())
        hi = std::max(hi, vanishing_window(b).hi);
    return hi;
}

} // namespace

ExtensionRegularity is_g_regular_extension(const IrredSum& a, const IrredSum& b)
{
    ExtensionRegularity out;
    if (a.n() != b.n())
        throw std::invalid_argument("is_g_regular_extension: mixed n");
    for (const auto& c : g_regularity_conditions(a.n())) {
        const IrredSum a2 = times_sym_q(a, c.sym_power);
        const IrredSum b2 = times_sym_q(b, c.sym_power);
        if (a2.is_zero() && b2.is_zero())
            continue;
        const int hi = extension_hi(a2, b2);
        for (int k = 0; k + c.offset <= hi; ++k) {
            const int t = k + c.offset;
            const DimInterval iv = les_hvec(twist(a2, t), twist(b2, t)).at(static_cast<std::size_t>(c.degree));
            if (iv.lo > 0)
                out.violations.push_back({c.id, k, c.degree, c.sym_power, t, iv});
            else if (iv.hi > 0)
                out.undetermined.push_back({c.id, k, c.degree, c.sym_power, t, iv});
        }
    }
    if (!out.violations.empty())
        out.verdict = TriState::False;
    else if (!out.undetermined.empty())
        out.verdict = TriState::Undetermined;
    return out;
}

ExtensionRegValue g_reg_extension(const IrredSum& a, const IrredSum& b)
{
    int m = std::numeric_limits<int>::min();
    for (const auto& c : g_regularity_conditions(a.n())) {
        const IrredSum a2 = times_sym_q(a, c.sym_power);
        const IrredSum b2 = times_sym_q(b, c.sym_power);
        if (a2.is_zero() && b2.is_zero())
            continue;
        m = std::max(m, extension_hi(a2, b2) - c.offset);
    }
    if (m == std::numeric_limits<int>::min())
        throw std::invalid_argument("g_reg_extension: zero extension");
    constexpr int max_steps = 1000;
    for (int step = 0; step < max_steps; ++step) {
        const TriState below = is_g_regular_extension(twist(a, m - 1), twist(b, m - 1)).verdict;
        if (below == TriState::False)
            return {TriState::True, m};
        if (below == TriState::Undetermined)
            return {TriState::Undetermined, m};
        --m;
    }
    return {TriState::Undetermined, m};
}

std::pair<IrredSum, IrredSum> euler_extension(int n, int k)
{
    return {IrredSum(Irred::line_bundle(n, k)), IrredSum(Irred::line_bundle(n, k + 1), binomial(n + 1, 2))};
}

} // namespace grc
