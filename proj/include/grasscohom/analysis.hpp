#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasscohom/expr.hpp"

namespace grc {

/// Cohomology of a direct sum in every degree 0..2n-2.
struct CohomRecord {
    struct Degree {
        WeightMultiset modules;
        BigInt dim = 0;
    };

    int n = 2;
    std::vector<Degree> degrees;

    int top() const { return 2 * n - 2; }
    const BigInt& dim(int degree) const { return degrees.at(static_cast<std::size_t>(degree)).dim; }
    BigInt euler_characteristic() const;
};

CohomRecord cohomology(const IrredSum& s);

BigInt h(const IrredSum& s, int degree);
BigInt euler_characteristic(const IrredSum& s);

/// Twist bounds outside which cohomology is concentrated in degree 0
/// (k >= hi) or degree 2n-2 (k <= lo). Throws on the zero bundle.
struct TwistWindow {
    int lo;
    int hi;
};
TwistWindow vanishing_window(const IrredSum& s);

/// {k : h^degree(s(k)) != 0}. Degrees 0 and 2n-2 are nonzero on a
/// half-line; that tail is reported as a threshold, the rest is listed.
struct TwistSet {
    std::vector<int> finite;
    std::optional<int> all_from;  ///< nonzero for every k >= all_from
    std::optional<int> all_upto;  ///< nonzero for every k <= all_upto

    bool empty() const { return finite.empty() && !all_from && !all_upto; }
    bool contains(int k) const;
};
TwistSet hstar_nonzero(const IrredSum& s, int degree);

struct CohomWitness {
    int degree;
    int twist;
    BigInt dim;

    friend bool operator==(const CohomWitness&, const CohomWitness&) = default;
};

struct IntermediateReport {
    bool present = false;
    std::vector<CohomWitness> witnesses;  ///< sorted by (degree, twist)
};
IntermediateReport has_intermediate_cohomology(const IrredSum& s);

/// One violated vanishing of the G-regularity conditions.
struct RegularityViolation {
    std::string condition;  ///< "i", "ii" or "iii"
    int k;                  ///< the k >= 0 of the definition
    int degree;
    int sym_power;          ///< the group is H^degree(F (x) S^sym_power Q (twist))
    int twist;
    BigInt dim;
};

struct RegularityReport {
    bool verdict = true;
    std::vector<RegularityViolation> violations;
};

/// A single vanishing H^degree(F (x) S^sym_power Q (k + offset)) = 0 required for all k >= 0.
struct RegularityCondition {
    std::string id;
    int degree;
    int sym_power;
    int offset;
};
std::vector<RegularityCondition> g_regularity_conditions(int n);

RegularityReport is_g_regular(const IrredSum& s);

/// Least m with s(m) G-regular; nullopt stands for -infinity (zero bundle).
std::optional<int> g_reg(const IrredSum& s);

struct QRegularityReport {
    bool verdict = true;
    std::vector<std::pair<std::string, BigInt>> groups;  ///< all five groups, label and dimension
};
/// The stricter regularity on the quadric G(1,3). Throws for n != 3.
QRegularityReport is_q_regular_n3(const IrredSum& s);

} // namespace grc
