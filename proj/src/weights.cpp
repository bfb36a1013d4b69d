#include "grasscohom/weights.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace grc {

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw std::invalid_argument("GLWeight: empty weight");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            throw std::invalid_argument("GLWeight: entries must be nonincreasing: " + str());
}

GLWeight::GLWeight(std::initializer_list<int> entries) : GLWeight(std::vector<int>(entries)) {}

GLWeight GLWeight::constant(std::size_t m, int c)
{
    return GLWeight(std::vector<int>(m, c));
}

GLWeight GLWeight::shifted(int c) const
{
    std::vector<int> out(entries_);
    for (int& e : out)
        e += c;
    return GLWeight(std::move(out));
}

std::string GLWeight::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
}

void WeightMultiset::add(const GLWeight& w, const BigInt& mult)
{
    if (mult < 0)
        throw std::invalid_argument("WeightMultiset: negative multiplicity");
    if (mult == 0)
        return;
    if (!items_.empty() && items_.begin()->first.size() != w.size())
        throw std::invalid_argument("WeightMultiset: weight length mismatch");
    items_[w] += mult;
}

void WeightMultiset::merge(const WeightMultiset& other, const BigInt& scale)
{
    for (const auto& [w, m] : other.items_)
        add(w, m * scale);
}

BigInt WeightMultiset::multiplicity(const GLWeight& w) const
{
    auto it = items_.find(w);
    return it == items_.end() ? BigInt(0) : it->second;
}

BigInt WeightMultiset::total_dim() const
{
    BigInt total = 0;
    for (const auto& [w, m] : items_)
        total += m * weyl_dim(w);
    return total;
}

WeightMultiset WeightMultiset::shifted(int c) const
{
    WeightMultiset out;
    for (const auto& [w, m] : items_)
        out.add(w.shifted(c), m);
    return out;
}

BigInt weyl_dim(const GLWeight& lambda)
{
    const std::size_t m = lambda.size();
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            num *= lambda[i] - lambda[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

GLWeight dual_weight(const GLWeight& lambda)
{
    std::vector<int> out(lambda.vec().rbegin(), lambda.vec().rend());
    for (int& e : out)
        e = -e;
    return GLWeight(std::move(out));
}

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

using Partition = std::vector<int>;
using LrTable = std::map<Partition, BigInt>;

// Builds LR tableaux of shape nu/outer with content `content` one label at a
// time: label l occupies a horizontal strip, and the reverse reading word stays
// a lattice word. Rows beyond m are never opened.
class LrEnumerator {
public:
    LrEnumerator(const Partition& outer, const Partition& content, std::size_t m)
        : m_(m), content_(content), shape_(outer)
    {
        shape_.resize(m_, 0);
        counts_.assign(m_, std::vector<int>(content_.size(), 0));
    }

    LrTable run()
    {
        place(0);
        return std::move(out_);
    }

private:
    void place(std::size_t label)
    {
        if (label == content_.size() || content_[label] == 0) {
            out_[shape_] += 1;
            return;
        }
        const Partition before = shape_;
        strip(label, 0, content_[label], before, 0, 0);
    }

    // cum_cur: label entries in rows < row; cum_prev: (label-1) entries in rows < row.
    void strip(std::size_t label, std::size_t row, int remaining, const Partition& before, int cum_cur,
               int cum_prev)
    {
        if (row == m_) {
            if (remaining == 0)
                place(label + 1);
            return;
        }
        int limit = remaining;
        if (row > 0)
            limit = std::min(limit, before[row - 1] - before[row]);
        for (int add = limit; add >= 0; --add) {
            if (label > 0 && cum_cur + add > cum_prev)
                continue;
            shape_[row] += add;
            counts_[row][label] += add;
            const int prev_here = label > 0 ? counts_[row][label - 1] : 0;
            strip(label, row + 1, remaining - add, before, cum_cur + add, cum_prev + prev_here);
            counts_[row][label] -= add;
            shape_[row] -= add;
        }
    }

    std::size_t m_;
    Partition content_;
    Partition shape_;
    std::vector<std::vector<int>> counts_;
    LrTable out_;
};

std::mutex lr_cache_mutex;
std::map<std::tuple<Partition, Partition, std::size_t>, LrTable> lr_cache;

LrTable lr_products(Partition lam, Partition mu, std::size_t m)
{
    // c^nu_{lam,mu} is symmetric; enumerate over the smaller content.
    auto weight = [](const Partition& p) {
        long s = 0;
        for (int e : p)
            s += e;
        return s;
    };
    if (weight(mu) > weight(lam) || (weight(mu) == weight(lam) && mu > lam))
        std::swap(lam, mu);
    auto key = std::make_tuple(lam, mu, m);
    {
        std::lock_guard<std::mutex> lock(lr_cache_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end())
            return it->second;
    }
    LrTable table = LrEnumerator(lam, mu, m).run();
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    lr_cache.emplace(std::move(key), table);
    return table;
}

} // namespace

WeightMultiset tensor_weights(const GLWeight& lambda, const GLWeight& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("tensor_weights: length mismatch " + lambda.str() + " vs " + mu.str());
    const std::size_t m = lambda.size();
    const int lshift = lambda.back();
    const int mshift = mu.back();
    Partition lp(lambda.vec());
    Partition mp(mu.vec());
    for (int& e : lp)
        e -= lshift;
    for (int& e : mp)
        e -= mshift;

    WeightMultiset out;
    for (const auto& [nu, mult] : lr_products(lp, mp, m)) {
        std::vector<int> w(nu);
        for (int& e : w)
            e += lshift + mshift;
        out.add(GLWeight(std::move(w)), mult);
    }
    return out;
}

} // namespace grc
