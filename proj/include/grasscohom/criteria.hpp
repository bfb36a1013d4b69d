#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasscohom/analysis.hpp"

namespace grc {

/// One cohomology group H^degree(E (x) S^sym_power Q (twist)), or, when
/// all_twists is set, the whole family H^degree_*(E (x) S^sym_power Q).
struct CriterionGroup {
    int degree;
    int sym_power;
    int twist = 0;
    bool all_twists = false;

    friend bool operator==(const CriterionGroup&, const CriterionGroup&) = default;
};

std::string describe(const CriterionGroup& g);

struct ConditionSpec {
    std::string label;
    bool nonvanishing = false;  ///< true: the group must be nonzero; false: every group must vanish
    std::vector<CriterionGroup> groups;
};

struct CriterionWitness {
    int degree;
    int twist;
    int sym_power;  ///< -1 when the factor is not a symmetric power of Q
    BigInt dim;
    std::string factor;
};

std::string sym_factor_name(int sym_power);

struct ConditionResult {
    std::string label;
    bool satisfied = true;
    std::vector<CriterionWitness> witnesses;
};

struct CriterionReport {
    std::string theorem;
    std::vector<ConditionResult> conditions;
    bool verdict = true;

    const ConditionResult* find(const std::string& label) const;
};

// Condition lists, generated from closed-form (degree, S^m Q, twist) patterns.
// Chains whose index range is empty are dropped.
std::vector<ConditionSpec> evans_griffith_conditions(int n, int r);
std::vector<ConditionSpec> wedge_summand_conditions(int n, int j);
std::vector<ConditionSpec> sym_summand_conditions(int n, int j);
std::vector<ConditionSpec> mt_conditions(int n);

/// Evaluates every condition on s; fixed twists are moved by extra_twist.
CriterionReport evaluate_conditions(const std::string& theorem, const std::vector<ConditionSpec>& specs,
                                    const IrredSum& s, int extra_twist = 0);

/// Total splitting criterion; r defaults to rank(s).
CriterionReport check_evans_griffith(const IrredSum& s, std::optional<int> r_override = std::nullopt);
CriterionReport check_wedge_summand(const IrredSum& s, int j);
CriterionReport check_sym_summand(const IrredSum& s, int j);
CriterionReport check_mt(const IrredSum& s);

/// Wraps the quadric Qregularity test in the same report shape.
CriterionReport check_q_regular(const IrredSum& s);

} // namespace grc
