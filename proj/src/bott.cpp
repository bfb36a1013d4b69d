#include "grasscohom/bott.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <vector>

namespace grc {

namespace {
std::atomic<int> mutation_depth{0};
}

Irred::Irred(int n_, GLWeight alpha_, GLWeight beta_) : n(n_), alpha(std::move(alpha_)), beta(std::move(beta_))
{
    if (n < 2)
        throw std::invalid_argument("Irred: n must be >= 2");
    if (alpha.size() != 2)
        throw std::invalid_argument("Irred: alpha must have length 2");
    if (beta.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("Irred: beta must have length n-1");
}

Irred Irred::line_bundle(int n, int k)
{
    return Irred(n, GLWeight{k, k}, GLWeight::constant(static_cast<std::size_t>(n - 1), 0));
}

std::string Irred::str() const
{
    return "[" + alpha.str() + ";" + beta.str() + "]";
}

std::optional<BottResult> bott(const Irred& x)
{
    const int n = x.n;
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n + 1));
    for (int e : x.alpha.entries())
        v.push_back(e);
    for (int e : x.beta.entries())
        v.push_back(e);
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] += n - i;

    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j])
                return std::nullopt;
            if (v[i] < v[j])
                ++inversions;
        }
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] -= n - i;

    if (mutation_depth.load() > 0 && inversions == n - 1)
        inversions = n - 2;

    GLWeight lambda(std::move(v));
    BigInt dim = weyl_dim(lambda);
    return BottResult{inversions, std::move(lambda), std::move(dim)};
}

Irred twist(const Irred& x, int k)
{
    return Irred(x.n, x.alpha.shifted(k), x.beta);
}

Irred dual_irred(const Irred& x)
{
    return Irred(x.n, dual_weight(x.alpha), dual_weight(x.beta));
}

Irred det_shift(const Irred& x, int c)
{
    return Irred(x.n, x.alpha.shifted(c), x.beta.shifted(c));
}

BigInt h(const Irred& x, int degree)
{
    auto r = bott(x);
    if (!r || r->degree != degree)
        return 0;
    return r->dim;
}

namespace testing {

ScopedBottMutation::ScopedBottMutation() { ++mutation_depth; }
ScopedBottMutation::~ScopedBottMutation() { --mutation_depth; }
bool bott_mutation_active() { return mutation_depth.load() > 0; }

} // namespace testing

} // namespace grc
