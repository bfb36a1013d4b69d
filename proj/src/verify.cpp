#include "grasscohom/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "grasscohom/criteria.hpp"
#include "grasscohom/sequences.hpp"

namespace grc {

namespace {

using Failure = std::optional<std::string>;

struct Claim {
    std::string id;
    std::string statement;
    int min_n;
    int max_n;
    std::function<Failure(int)> run;
};

std::string num(int v) { return std::to_string(v); }

IrredSum wedge_s(int j, int n) { return bundle("wedge^" + num(j) + "(S)", n); }
IrredSum sym_qs(int j, int n) { return IrredSum(sym_q(j, n)); }

std::string witnesses_str(const std::vector<CohomWitness>& ws)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ws.size(); ++i)
        os << (i ? "," : "") << "H^" << ws[i].degree << "@" << ws[i].twist << "=" << ws[i].dim.get_str();
    os << '}';
    return os.str();
}

Failure no_intermediate(int n)
{
    for (int j = 0; j <= n - 2; ++j) {
        if (has_intermediate_cohomology(wedge_s(j, n)).present)
            return "wedge^" + num(j) + "(S) has intermediate cohomology";
        if (has_intermediate_cohomology(sym_qs(j, n)).present)
            return "sym^" + num(j) + "(Q) has intermediate cohomology";
    }
    return std::nullopt;
}

Failure sym_power_intermediate(int n)
{
    for (int j = n - 1; j <= n + 1; ++j) {
        const auto rep = has_intermediate_cohomology(sym_qs(j, n));
        std::set<std::pair<int, int>> got;
        for (const auto& w : rep.witnesses)
            got.insert({w.degree, w.twist});
        std::set<std::pair<int, int>> want;
        for (int k = 0; k <= j - n + 1; ++k)
            want.insert({n - 1, -n - k});
        if (got != want)
            return "sym^" + num(j) + "(Q): got " + witnesses_str(rep.witnesses);
    }
    return std::nullopt;
}

Failure sym_sym_intermediate(int n)
{
    for (int j = 0; j <= 4; ++j) {
        for (int i = 0; i <= j; ++i) {
            const IrredSum s = tensor(sym_qs(i, n), sym_qs(j, n));
            for (const auto& w : has_intermediate_cohomology(s).witnesses)
                if (w.degree != n - 1 || w.twist > -n)
                    return "sym^" + num(i) + "(Q)*sym^" + num(j) + "(Q): H^" + num(w.degree) + " at twist " +
                           num(w.twist);
        }
    }
    return std::nullopt;
}

Failure wedge_sym_intermediate(int n)
{
    for (int j = 1; j <= n - 2; ++j) {
        for (int i = 0; i <= n - 2; ++i) {
            std::vector<CohomWitness> want;
            if (i == n - j - 1)
                want.push_back({n - 1 - j, -n + j, 1});
            if (i == j)
                want.push_back({2 * n - 2 - j, -n - 1, 1});
            std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
                return std::pair(a.degree, a.twist) < std::pair(b.degree, b.twist);
            });
            const auto got = has_intermediate_cohomology(tensor(wedge_s(j, n), sym_qs(i, n))).witnesses;
            if (got != want)
                return "wedge^" + num(j) + "(S)*sym^" + num(i) + "(Q): got " + witnesses_str(got) + ", want " +
                       witnesses_str(want);
        }
    }
    return std::nullopt;
}

Failure extension_groups(int n)
{
    // (R^dual_{n-1}) and the Koszul analogue each define a class in a one-dimensional group.
    if (h(twist(sym_qs(n - 1, n), -n), n - 1) != 1)
        return "h^{n-1}(S^{n-1}Q(-n)) != 1";
    if (h(IrredSum(Irred::line_bundle(n, -n - 1)), 2 * n - 2) != 1)
        return "h^{2n-2}(O(-n-1)) != 1";
    return std::nullopt;
}

Failure regularity_zero(int n)
{
    auto check = [&](const IrredSum& s, const std::string& name) -> Failure {
        auto g = g_reg(s);
        if (!g || *g != 0)
            return "G-reg(" + name + ") = " + (g ? num(*g) : std::string("-inf"));
        return std::nullopt;
    };
    if (auto f = check(IrredSum(Irred::line_bundle(n, 0)), "O"))
        return f;
    for (int j = 1; j <= n - 2; ++j)
        if (auto f = check(wedge_s(j, n), "wedge^" + num(j) + "(S)"))
            return f;
    for (int j = 0; j <= 5; ++j)
        if (auto f = check(sym_qs(j, n), "sym^" + num(j) + "(Q)"))
            return f;
    return std::nullopt;
}

Failure tangent_regularity(int n)
{
    {
        auto [a, b] = euler_extension(n, -1);
        const auto rep = is_g_regular_extension(a, b);
        if (rep.verdict != TriState::True)
            return "T|G(-1) regularity is " + to_string(rep.verdict);
    }
    {
        auto [a, b] = euler_extension(n, -2);
        const auto rep = is_g_regular_extension(a, b);
        if (rep.verdict != TriState::False)
            return "T|G(-2) regularity is " + to_string(rep.verdict);
        auto [a2, b2] = euler_extension(n, -n - 1);
        const DimInterval iv = les_hvec(a2, b2).at(static_cast<std::size_t>(2 * n - 3));
        if (!(iv.lo == 1 && iv.hi == 1))
            return "h^{2n-3}(T|G(-n-1)) is not exactly 1";
    }
    auto [a, b] = euler_extension(n, 0);
    const auto g = g_reg_extension(a, b);
    if (g.status != TriState::True || g.value != -1)
        return "G-reg(T|G) = " + num(g.value) + " (" + to_string(g.status) + ")";
    return std::nullopt;
}

bool castelnuovo_mumford_p2(const IrredSum& f)
{
    // Vanishing only has to be checked until both groups are out of range.
    for (int k = 0; k <= 40; ++k)
        if (h(twist(f, k - 1), 1) != 0 || h(twist(f, k - 2), 2) != 0)
            return false;
    return true;
}

Failure plane_coincidence(int n)
{
    for (int d = -4; d <= 4; ++d) {
        for (int e = d; e <= 4; ++e) {
            const IrredSum f = bundle("O(" + num(d) + ")+O(" + num(e) + ")", n);
            if (is_g_regular(f).verdict != castelnuovo_mumford_p2(f))
                return "O(" + num(d) + ")+O(" + num(e) + ")";
        }
        if (*g_reg(IrredSum(Irred::line_bundle(n, d))) != -d)
            return "G-reg(O(" + num(d) + ")) != " + num(-d);
        for (int j = 0; j <= 3; ++j) {
            const IrredSum f = twist(sym_qs(j, n), d);
            if (is_g_regular(f).verdict != castelnuovo_mumford_p2(f))
                return "sym^" + num(j) + "(Q)(" + num(d) + ")";
        }
    }
    return std::nullopt;
}

Failure qregular_sweep(int n)
{
    const std::vector<std::string> atoms = {"O", "Q", "S", "dual(Q)", "dual(S)", "sym^2(Q)"};
    std::vector<IrredSum> family;
    for (const auto& a : atoms)
        for (int t = -3; t <= 3; ++t)
            family.push_back(twist(bundle(a, n), t));
    const std::size_t singles = family.size();
    for (std::size_t i = 0; i < singles; ++i)
        for (std::size_t j = i + 1; j < singles; j += 5)
            family.push_back(family[i] + family[j]);
    int qregular = 0;
    for (const auto& s : family) {
        if (!is_q_regular_n3(s).verdict)
            continue;
        ++qregular;
        if (!is_g_regular(s).verdict)
            return "Qregular but not G-regular: " + s.str();
    }
    if (qregular == 0)
        return "sweep found no Qregular sample";
    return std::nullopt;
}

std::vector<std::vector<int>> multisets(int lo, int hi, int max_size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (!cur.empty())
            out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_size)
            return;
        for (int v = start; v <= hi; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(lo);
    return out;
}

Failure evans_griffith_consistency(int n)
{
    for (const auto& twists : multisets(-3, 3, 4)) {
        IrredSum s(n);
        for (int t : twists)
            s.add(Irred::line_bundle(n, t));
        if (!check_evans_griffith(s).verdict)
            return "split bundle fails: " + s.str();
    }
    if (check_evans_griffith(bundle("Q", n)).verdict)
        return "Q passes";
    if (check_evans_griffith(bundle("S", n)).verdict)
        return "S passes";
    if (n == 3) {
        // H^1_*(E (x) Q) = H^2_*(E (x) Q) = 0, plus H^3_*(E) = 0 when r >= 4.
        for (int r = 2; r <= 8; ++r) {
            std::set<std::pair<int, int>> got;
            for (const auto& c : evans_griffith_conditions(3, r))
                for (const auto& g : c.groups)
                    got.insert({g.degree, g.sym_power});
            std::set<std::pair<int, int>> want{{1, 1}, {2, 1}};
            if (r >= 4)
                want.insert({3, 0});
            if (got != want)
                return "n=3 condition list differs at r=" + num(r);
        }
    }
    return std::nullopt;
}

Failure summand_consistency(int n)
{
    for (int j = 1; j <= n - 2; ++j) {
        const IrredSum w = wedge_s(j, n);
        const IrredSum s = sym_qs(j, n);
        for (int t = -1; t <= 2; ++t) {
            const IrredSum extra = t < 0 ? IrredSum(n) : IrredSum(Irred::line_bundle(n, t));
            if (!check_wedge_summand(w + extra, j).verdict)
                return "wedge^" + num(j) + "(S) not detected (extra O(" + num(t) + "))";
            if (!check_sym_summand(s + extra, j).verdict)
                return "sym^" + num(j) + "(Q) not detected (extra O(" + num(t) + "))";
        }
        const IrredSum o(Irred::line_bundle(n, 0));
        if (check_wedge_summand(o, j).find("i")->satisfied)
            return "O satisfies nonvanishing (i) of the wedge criterion, j=" + num(j);
        if (check_sym_summand(o, j).find("i")->satisfied)
            return "O satisfies nonvanishing (i) of the sym criterion, j=" + num(j);
    }
    return std::nullopt;
}

Failure mt_consistency(int n)
{
    std::vector<IrredSum> atoms{IrredSum(Irred::line_bundle(n, 0)), bundle("Q", n)};
    for (int j = 1; j <= n - 2; ++j)
        atoms.push_back(wedge_s(j, n));
    const int count = static_cast<int>(atoms.size());
    int salt = 0;
    for (const auto& pick : multisets(0, count - 1, 4)) {
        for (int variant = 0; variant < 3; ++variant) {
            IrredSum s(n);
            for (std::size_t i = 0; i < pick.size(); ++i) {
                const int t = ((salt + static_cast<int>(i) * 3 + variant * 5) % 7) - 3;
                s += twist(atoms[static_cast<std::size_t>(pick[i])], t);
            }
            ++salt;
            if (!check_mt(s).verdict)
                return "fails: " + s.str();
        }
    }
    if (check_mt(sym_qs(n - 1, n)).verdict)
        return "sym^{n-1}(Q) passes";
    if (check_mt(sym_qs(n, n)).verdict)
        return "sym^n(Q) passes";

    std::set<std::pair<int, int>> got;
    for (const auto& c : mt_conditions(n))
        for (const auto& g : c.groups)
            got.insert({g.degree, g.sym_power});
    std::set<std::pair<int, int>> want;
    if (n == 3 || n == 4)
        for (int d = 1; d <= 2 * n - 3; ++d)
            want.insert({d, 0});
    if (n == 4)
        want.insert({{2, 1}, {3, 1}, {4, 1}});
    if ((n == 3 || n == 4) && got != want)
        return "condition list for n=" + num(n) + " does not collapse as expected";
    return std::nullopt;
}

Failure sequence_exactness(int n)
{
    std::vector<TermList> seqs{build_koszul(n)};
    for (int j = 1; j <= n - 1; ++j) {
        seqs.push_back(build_Rj(j, n));
        seqs.push_back(build_Rj_dual(j, n));
    }
    const std::vector<IrredSum> factors{IrredSum(Irred::line_bundle(n, 0)), bundle("Q", n), bundle("S", n),
                                        bundle("sym^2(Q)", n)};
    for (const auto& seq : seqs)
        for (const auto& f : factors)
            for (int t = -8; t <= 8; ++t)
                if (!verify_chi_additivity(seq, f, t).additive)
                    return seq.id + " tensored by " + f.str() + " twist " + num(t);
    return std::nullopt;
}

const std::vector<Claim>& claims()
{
    static const std::vector<Claim> all = {
        {"no-intermediate-cohomology", "wedge^j S and S^j Q, 0 <= j <= n-2, have no intermediate cohomology", 3, 6,
         no_intermediate},
        {"sym-power-intermediate", "the intermediate cohomology of S^j Q (j >= n-1) is H^{n-1}(S^j Q(-n-k)), k=0..j-n+1",
         3, 6, sym_power_intermediate},
        {"sym-sym-intermediate", "S^i Q (x) S^j Q has intermediate cohomology only in degree n-1 at twists <= -n", 3, 6,
         sym_sym_intermediate},
        {"wedge-sym-intermediate",
         "wedge^j S (x) S^i Q has only H^{n-1-j}(.(-n+j)) for i=n-j-1 and H^{2n-2-j}(.(-n-1)) for i=j, each of dim 1",
         3, 6, wedge_sym_intermediate},
        {"extension-groups", "h^{n-1}(S^{n-1}Q(-n)) = h^{2n-2}(O(-n-1)) = 1", 2, 6, extension_groups},
        {"sequence-exactness", "chi and rank additivity of R_j, Rdual_j, koszul under twists and tensor factors", 2, 6,
         sequence_exactness},
        {"regularity-zero", "G-reg(O) = G-reg(S^j Q) = G-reg(wedge^j S) = 0", 2, 6, regularity_zero},
        {"tangent-regularity", "T|G(-1) is G-regular, T|G(-2) is not, G-reg(T|G) = -1", 2, 6, tangent_regularity},
        {"plane-coincidence", "on G(1,2) = P^2, G-regularity is Castelnuovo-Mumford regularity", 2, 2,
         plane_coincidence},
        {"qregular-implies-gregular", "on G(1,3), every Qregular sample is G-regular", 3, 3, qregular_sweep},
        {"splitting-criterion", "sums of line bundles pass the splitting criterion; Q and S fail", 3, 6,
         evans_griffith_consistency},
        {"summand-criteria", "wedge^j S and S^j Q pass their summand criteria, also inside E + O(t)", 3, 6,
         summand_consistency},
        {"direct-sum-criterion", "sums of twists of O, Q, wedge^j S pass; S^{n-1}Q, S^n Q fail", 3, 6,
         mt_consistency},
    };
    return all;
}

} // namespace

std::vector<ClaimResult> verify_claims(int n_lo, int n_hi)
{
    if (n_lo < 2 || n_hi > 6 || n_lo > n_hi)
        throw std::invalid_argument("verify range must satisfy 2 <= lo <= hi <= 6");
    std::vector<ClaimResult> out;
    for (const auto& claim : claims()) {
        for (int n = std::max(n_lo, claim.min_n); n <= std::min(n_hi, claim.max_n); ++n) {
            Failure f = claim.run(n);
            out.push_back({claim.id, claim.statement, n, !f.has_value(), f.value_or("")});
        }
    }
    return out;
}

} // namespace grc
