#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "grasscohom/analysis.hpp"
#include "grasscohom/bott.hpp"
#include "grasscohom/expr.hpp"
#include "grasscohom/weights.hpp"

namespace grc::test {

inline std::mt19937& rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline GLWeight random_weight(std::size_t m, int lo, int hi)
{
    std::vector<int> v(m);
    for (auto& x : v)
        x = uniform(lo, hi);
    std::sort(v.rbegin(), v.rend());
    return GLWeight(v);
}

inline Irred random_irred(int n, int lo = -5, int hi = 5)
{
    return Irred(n, random_weight(2, lo, hi), random_weight(static_cast<std::size_t>(n - 1), lo, hi));
}

inline IrredSum random_sum(int n, int max_terms = 3, int lo = -4, int hi = 4)
{
    IrredSum s(n);
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i)
        s.add(random_irred(n, lo, hi), uniform(1, 2));
    return s;
}

inline IrredSum line(int n, int k) { return IrredSum(Irred::line_bundle(n, k)); }

/// Determinant by fraction-free Gaussian elimination.
inline BigInt det(std::vector<std::vector<BigInt>> a)
{
    const std::size_t m = a.size();
    BigInt sign = 1;
    BigInt prev = 1;
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

inline BigInt power(long base, long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

/// Schur polynomial s_lambda(x) for a partition, as a ratio of alternants.
inline BigInt schur_eval(const std::vector<int>& lambda, const std::vector<long>& x)
{
    const std::size_t m = x.size();
    std::vector<std::vector<BigInt>> num(m, std::vector<BigInt>(m));
    std::vector<std::vector<BigInt>> den(m, std::vector<BigInt>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            num[i][j] = power(x[i], lambda[j] + static_cast<long>(m - 1 - j));
            den[i][j] = power(x[i], static_cast<long>(m - 1 - j));
        }
    const BigInt d = det(den);
    BigInt q = det(num);
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Number of semistandard tableaux of a partition shape with entries 1..m.
inline long count_ssyt(const std::vector<int>& shape, int m)
{
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            cells.emplace_back(static_cast<int>(r), c);
    std::vector<std::vector<int>> t(shape.size(), std::vector<int>(shape.empty() ? 0 : shape[0], 0));
    long count = 0;
    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            t[r][c] = v;
            self(self, idx + 1);
        }
    };
    fill(fill, 0);
    return count;
}

} // namespace grc::test
