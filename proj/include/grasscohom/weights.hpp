#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grc {

using BigInt = mpz_class;

/// A dominant weight of GL_m: a nonincreasing tuple of integers.
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<int> entries);
    GLWeight(std::initializer_list<int> entries);

    /// Constant weight (c,...,c) of length m.
    static GLWeight constant(std::size_t m, int c);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }
    std::span<const int> entries() const { return entries_; }
    const std::vector<int>& vec() const { return entries_; }

    /// Adds c to every entry (tensoring with det^c).
    GLWeight shifted(int c) const;

    std::string str() const;

    friend auto operator<=>(const GLWeight&, const GLWeight&) = default;
    friend bool operator==(const GLWeight&, const GLWeight&) = default;

private:
    std::vector<int> entries_;
};

/// Multiset of weights of one fixed length, multiplicities >= 1.
class WeightMultiset {
public:
    using Map = std::map<GLWeight, BigInt>;

    void add(const GLWeight& w, const BigInt& mult = 1);
    void merge(const WeightMultiset& other, const BigInt& scale = 1);

    bool empty() const { return items_.empty(); }
    std::size_t distinct() const { return items_.size(); }
    const Map& items() const { return items_; }
    BigInt multiplicity(const GLWeight& w) const;

    /// Sum of mult * weyl_dim(weight).
    BigInt total_dim() const;

    WeightMultiset shifted(int c) const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    Map items_;
};

BigInt weyl_dim(const GLWeight& lambda);

/// (-l_m, ..., -l_1), the highest weight of the contragredient representation.
GLWeight dual_weight(const GLWeight& lambda);

/// Decomposes V_lambda (x) V_mu for GL_m by the Littlewood-Richardson rule.
/// Throws std::invalid_argument on a length mismatch.
WeightMultiset tensor_weights(const GLWeight& lambda, const GLWeight& mu);

BigInt binomial(long n, long k);

} // namespace grc
