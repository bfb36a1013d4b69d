// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <algorithm>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "grasscohom/criteria.hpp"
#include "grasscohom/sequences.hpp"

using namespace grc;

namespace {

using Failure = std::optional<std::string>;

std::string num(long v) { return std::to_string(v); }
std::string wedge(int j) { return "wedge^" + num(j) + "(S)"; }
std::string sym(int j) { return "sym^" + num(j) + "(Q)"; }
IrredSum line(int n, int k) { return IrredSum(Irred::line_bundle(n, k)); }

using WitnessSet = std::set<std::tuple<int, int, std::string>>;

WitnessSet witnesses(const IrredSum& s)
{
    WitnessSet out;
    for (const auto& w : has_intermediate_cohomology(s).witnesses)
        out.insert({w.degree, w.twist, w.dim.get_str()});
    return out;
}

std::string show(const WitnessSet& w)
{
    std::string out = "{";
    for (const auto& [d, t, dim] : w)
        out += (out.size() > 1 ? "," : "") + std::string("H^") + num(d) + "(" + num(t) + ")=" + dim;
    return out + "}";
}

Failure c1()
{
    for (int n = 3; n <= 6; ++n)
        for (int j = 0; j <= n - 2; ++j) {
            if (has_intermediate_cohomology(bundle(wedge(j), n)).present)
                return wedge(j) + " n=" + num(n);
            if (has_intermediate_cohomology(bundle(sym(j), n)).present)
                return sym(j) + " n=" + num(n);
        }
    return std::nullopt;
}

Failure c2()
{
    for (int n = 3; n <= 5; ++n)
        for (int j = n - 1; j <= n + 1; ++j) {
            const IrredSum s = bundle(sym(j), n);
            std::set<std::pair<int, int>> got;
            for (const auto& w : has_intermediate_cohomology(s).witnesses)
                got.insert({w.degree, w.twist});
            std::set<std::pair<int, int>> want;
            for (int k = 0; k <= j - n + 1; ++k)
                want.insert({n - 1, -n - k});
            if (got != want)
                return sym(j) + " n=" + num(n) + ": " + show(witnesses(s));
        }
    return std::nullopt;
}

Failure c3()
{
    for (int n = 3; n <= 5; ++n)
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i <= j; ++i) {
                const std::string e = sym(i) + "*" + sym(j);
                for (const auto& w : has_intermediate_cohomology(bundle(e, n)).witnesses)
                    if (w.degree != n - 1 || w.twist > -n)
                        return e + " n=" + num(n) + ": H^" + num(w.degree) + "(" + num(w.twist) + ")";
            }
    return std::nullopt;
}

Failure c4()
{
    for (int n = 3; n <= 5; ++n)
        for (int j = 1; j <= n - 2; ++j)
            for (int i = 0; i <= n - 2; ++i) {
                const std::string e = wedge(j) + "*" + sym(i);
                WitnessSet want;
                if (i == n - j - 1)
                    want.insert({n - 1 - j, -n + j, "1"});
                if (i == j)
                    want.insert({2 * n - 2 - j, -n - 1, "1"});
                const WitnessSet got = witnesses(bundle(e, n));
                if (got != want)
                    return e + " n=" + num(n) + ": got " + show(got) + ", want " + show(want);
            }
    return std::nullopt;
}

Failure c5()
{
    for (int n = 3; n <= 6; ++n) {
        if (g_reg(line(n, 0)) != 0)
            return "O n=" + num(n);
        for (int j = 1; j <= n - 2; ++j)
            if (g_reg(bundle(wedge(j), n)) != 0)
                return wedge(j) + " n=" + num(n);
        for (int j = 0; j <= 5; ++j)
            if (g_reg(bundle(sym(j), n)) != 0)
                return sym(j) + " n=" + num(n);
    }
    for (int n = 3; n <= 5; ++n) {
        const auto [a1, b1] = euler_extension(n, -1);
        const ExtensionRegularity r1 = is_g_regular_extension(a1, b1);
        if (r1.verdict != TriState::True || !r1.undetermined.empty())
            return "T(-1) not certainly regular, n=" + num(n);
        const auto [a2, b2] = euler_extension(n, -2);
        const ExtensionRegularity r2 = is_g_regular_extension(a2, b2);
        if (r2.verdict != TriState::False)
            return "T(-2) not certainly irregular, n=" + num(n);
        // Witness twists are relative to E = T(-2).
        bool witness = false;
        for (const auto& w : r2.violations)
            witness = witness || (w.degree == 2 * n - 3 && w.sym_power == 0 && w.twist - 2 == -n - 1 &&
                                  w.dim == DimInterval{1, 1});
        if (!witness)
            return "missing witness H^{2n-3}(T(-n-1)) = 1, n=" + num(n);
        const auto [a, b] = euler_extension(n, 0);
        const ExtensionRegValue v = g_reg_extension(a, b);
        if (v.status != TriState::True || v.value != -1)
            return "G-reg(T) != -1, n=" + num(n);
    }
    return std::nullopt;
}

bool castelnuovo_mumford(const IrredSum& f)
{
    // Beyond the vanishing window both groups are zero for every k.
    const TwistWindow w = vanishing_window(f);
    for (int k = 0; k <= std::max(0, w.hi + 4 - w.lo); ++k)
        if (h(twist(f, k - 1), 1) != 0 || h(twist(f, k - 2), 2) != 0)
            return false;
    return true;
}

Failure c6()
{
    std::vector<IrredSum> family;
    for (int d = -4; d <= 4; ++d)
        for (int e = -4; e <= 4; ++e)
            family.push_back(line(2, d) + line(2, e));
    for (int j = 0; j <= 3; ++j)
        for (int d = -4; d <= 4; ++d)
            family.push_back(twist(bundle(sym(j), 2), d));
    for (const auto& f : family)
        if (is_g_regular(f).verdict != castelnuovo_mumford(f))
            return f.str();
    return std::nullopt;
}

Failure c7(std::mt19937& rng)
{
    std::uniform_int_distribution<int> twist_d(-3, 3);
    std::uniform_int_distribution<int> count_d(1, 4);
    for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            IrredSum s(n);
            const int count = count_d(rng);
            for (int i = 0; i < count; ++i)
                s += line(n, twist_d(rng));
            if (!check_evans_griffith(s).verdict)
                return "split bundle fails: " + s.str();
        }
        if (check_evans_griffith(bundle("Q", n)).verdict)
            return "Q passes, n=" + num(n);
        if (check_evans_griffith(bundle("S", n)).verdict)
            return "S passes, n=" + num(n);
    }
    // The quadric rendering: H^1_*(E (x) Q) = H^2_*(E (x) Q) = 0, with H^3_*(E) = 0 once r >= 4.
    for (int r = 2; r <= 8; ++r) {
        std::vector<std::string> got;
        for (const auto& c : evans_griffith_conditions(3, r))
            for (const auto& g : c.groups)
                got.push_back(describe(g));
        std::vector<std::string> want{"H^1_*(E (x) Q)", "H^2_*(E (x) Q)"};
        if (r >= 4)
            want.push_back("H^3_*(E)");
        if (got != want)
            return "quadric condition list differs at r=" + num(r);
    }
    return std::nullopt;
}

Failure c8()
{
    for (int n = 3; n <= 5; ++n)
        for (int j = 1; j <= n - 2; ++j) {
            for (int t = -1; t <= 2; ++t) {
                const IrredSum extra = t < 0 ? IrredSum(n) : line(n, t);
                if (!check_wedge_summand(bundle(wedge(j), n) + extra, j).verdict)
                    return wedge(j) + " (+ O(" + num(t) + ")) not detected, n=" + num(n);
                if (!check_sym_summand(bundle(sym(j), n) + extra, j).verdict)
                    return sym(j) + " (+ O(" + num(t) + ")) not detected, n=" + num(n);
            }
            if (check_wedge_summand(line(n, 0), j).find("i")->satisfied)
                return "O passes (i) of the wedge criterion, j=" + num(j) + " n=" + num(n);
            if (check_sym_summand(line(n, 0), j).find("i")->satisfied)
                return "O passes (i) of the sym criterion, j=" + num(j) + " n=" + num(n);
        }
    return std::nullopt;
}

Failure c9(std::mt19937& rng)
{
    std::uniform_int_distribution<int> twist_d(-3, 3);
    std::uniform_int_distribution<int> count_d(1, 4);
    for (int n = 3; n <= 5; ++n) {
        std::vector<std::string> atoms{"O", "Q"};
        for (int j = 1; j <= n - 2; ++j)
            atoms.push_back(wedge(j));
        std::uniform_int_distribution<int> atom_d(0, static_cast<int>(atoms.size()) - 1);
        for (int trial = 0; trial < 40; ++trial) {
            IrredSum s(n);
            const int count = count_d(rng);
            for (int i = 0; i < count; ++i)
                s += twist(bundle(atoms[static_cast<std::size_t>(atom_d(rng))], n), twist_d(rng));
            if (!check_mt(s).verdict)
                return "fails on " + s.str();
        }
        if (check_mt(bundle(sym(n - 1), n)).verdict)
            return sym(n - 1) + " passes, n=" + num(n);
        if (check_mt(bundle(sym(n), n)).verdict)
            return sym(n) + " passes, n=" + num(n);
    }
    std::set<std::pair<int, int>> n3, n4;
    for (const auto& c : mt_conditions(3))
        for (const auto& g : c.groups)
            n3.insert({g.degree, g.sym_power});
    for (const auto& c : mt_conditions(4))
        for (const auto& g : c.groups)
            n4.insert({g.degree, g.sym_power});
    if (n3 != std::set<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}})
        return "n=3 hypotheses are not 'no intermediate cohomology'";
    if (n4 != std::set<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1}, {3, 1}, {4, 1}})
        return "n=4 hypotheses differ";
    return std::nullopt;
}

Failure c10()
{
    for (int n = 2; n <= 6; ++n) {
        std::vector<TermList> seqs{build_koszul(n)};
        if (n >= 3)
            for (int j = 1; j <= n - 1; ++j) {
                seqs.push_back(build_Rj(j, n));
                seqs.push_back(build_Rj_dual(j, n));
            }
        const std::vector<IrredSum> factors{line(n, 0), bundle("Q", n), bundle("S", n), bundle("sym^2(Q)", n)};
        for (const auto& seq : seqs)
            for (const auto& f : factors)
                for (int t = -8; t <= 8; ++t) {
                    const ChiCheck c = verify_chi_additivity(seq, f, t);
                    if (c.chi_sum != 0 || c.rank_sum != 0)
                        return seq.id + " n=" + num(n) + " twist " + num(t) + " (x) " + f.str();
                }
    }
    return std::nullopt;
}

Failure c11()
{
    for (int d = -12; d <= 12; ++d) {
        const IrredSum o = line(2, d);
        const BigInt h0 = d >= 0 ? binomial(d + 2, 2) : BigInt(0);
        const BigInt h2 = d <= -3 ? binomial(-d - 1, 2) : BigInt(0);
        if (h(o, 0) != h0 || h(o, 1) != 0 || h(o, 2) != h2)
            return "P^2 table at O(" + num(d) + ")";
    }
    for (int k = 0; k <= 10; ++k)
        if (h(line(3, k), 0) != binomial(k + 5, 5) - binomial(k + 3, 5))
            return "quadric h^0(O(" + num(k) + "))";
    if (h(line(3, -6), 4) != 20 || h(line(3, 2), 0) != 20)
        return "Serre duality pair h^4(O(-6)) = h^0(O(2)) = 20";
    return std::nullopt;
}

std::vector<int> sorted_entries(std::mt19937& rng, std::size_t m, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<int> v(m);
    for (auto& x : v)
        x = d(rng);
    std::sort(v.rbegin(), v.rend());
    return v;
}

BigInt det(std::vector<std::vector<BigInt>> a)
{
    const std::size_t m = a.size();
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < m && a[p][k] == 0)
                ++p;
            if (p == m)
                return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

// s_lambda(x) for a partition lambda by the bialternant formula.
BigInt schur_eval(const std::vector<int>& lambda, const std::vector<long>& x)
{
    const std::size_t m = x.size();
    std::vector<std::vector<BigInt>> num_m(m, std::vector<BigInt>(m)), den_m(m, std::vector<BigInt>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            mpz_ui_pow_ui(num_m[i][j].get_mpz_t(), static_cast<unsigned long>(x[i]),
                          static_cast<unsigned long>(lambda[j] + static_cast<int>(m - 1 - j)));
            mpz_ui_pow_ui(den_m[i][j].get_mpz_t(), static_cast<unsigned long>(x[i]),
                          static_cast<unsigned long>(m - 1 - j));
        }
    BigInt q = det(num_m);
    const BigInt d = det(den_m);
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    return q;
}

Failure c12(std::mt19937& rng)
{
    std::uniform_int_distribution<int> small(-6, 6);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            const Irred x(n, GLWeight(sorted_entries(rng, 2, -6, 6)),
                          GLWeight(sorted_entries(rng, static_cast<std::size_t>(n - 1), -6, 6)));
            const Irred y = twist(dual_irred(x), -n - 1);
            for (int i = 0; i <= 2 * n - 2; ++i)
                if (h(x, i) != h(y, 2 * n - 2 - i))
                    return "Serre duality fails on " + x.str();
            const int c = std::uniform_int_distribution<int>(-2, 2)(rng);
            const auto a = bott(x);
            const auto b = bott(det_shift(x, c));
            if (a.has_value() != b.has_value() || (a && (a->degree != b->degree || a->dim != b->dim)))
                return "det shift changes cohomology of " + x.str();
        }
    for (std::size_t m = 1; m <= 5; ++m)
        for (int trial = 0; trial < 40; ++trial) {
            // |lambda| <= 6 after normalizing the last entry to zero.
            std::vector<int> la, mu;
            do
                la = sorted_entries(rng, m, 0, 3);
            while (std::accumulate(la.begin(), la.end(), 0) - static_cast<int>(m) * la.back() > 6);
            do
                mu = sorted_entries(rng, m, 0, 3);
            while (std::accumulate(mu.begin(), mu.end(), 0) - static_cast<int>(m) * mu.back() > 6);
            const GLWeight a(la), b(mu);
            const WeightMultiset ab = tensor_weights(a, b);
            if (ab.total_dim() != weyl_dim(a) * weyl_dim(b))
                return "dimension identity fails on " + a.str() + " x " + b.str();
            std::vector<long> x{1, 2, 3, 4, 5, 6, 7};
            std::shuffle(x.begin(), x.end(), rng);
            x.resize(m);
            BigInt rhs = 0;
            for (const auto& [nu, mult] : ab)
                rhs += mult * schur_eval(nu.vec(), x);
            if (schur_eval(la, x) * schur_eval(mu, x) != rhs)
                return "character identity fails on " + a.str() + " x " + b.str();
        }
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            IrredSum s(n);
            s.add(Irred(n, GLWeight(sorted_entries(rng, 2, -3, 3)),
                        GLWeight(sorted_entries(rng, static_cast<std::size_t>(n - 1), -3, 3))));
            const int t = std::uniform_int_distribution<int>(-3, 3)(rng);
            if (*g_reg(twist(s, t)) != *g_reg(s) - t)
                return "g_reg twist law fails on " + s.str();
        }
    return std::nullopt;
}

} // namespace

int main()
{
    std::mt19937 rng(7u);
    const std::vector<std::pair<std::string, std::function<Failure()>>> criteria{
        {"no intermediate cohomology of wedge^j S, S^j Q (j <= n-2)", c1},
        {"intermediate cohomology of S^j Q, j >= n-1", c2},
        {"intermediate cohomology of S^i Q (x) S^j Q", c3},
        {"intermediate cohomology of wedge^j S (x) S^i Q", c4},
        {"G-reg values and the tangent bundle", c5},
        {"G(1,2): G-regularity equals Castelnuovo-Mumford regularity", c6},
        {"splitting criterion self-consistency", [&] { return c7(rng); }},
        {"wedge and sym summand criteria", c8},
        {"direct sum criterion", [&] { return c9(rng); }},
        {"exact sequence certificates", c10},
        {"closed-form oracle cross-checks", c11},
        {"property suites", [&] { return c12(rng); }},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Failure f;
        try {
            f = check();
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (f ? "FAIL" : "PASS") << "  criterion " << index << ": " << name << " (" << ms << " ms)";
        if (f)
            std::cout << "  -- " << *f;
        std::cout << "\n";
        failed += f ? 1 : 0;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
