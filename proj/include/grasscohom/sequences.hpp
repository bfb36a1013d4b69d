#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasscohom/analysis.hpp"

namespace grc {

/// A term W (x) F of an exact complex, with W a trivial bundle of rank `coefficient`.
struct Term {
    BigInt coefficient;
    IrredSum bundle;
    std::string label;
};

/// An exact sequence 0 -> T_0 -> T_1 -> ... -> T_last -> 0.
struct TermList {
    std::string id;
    int n = 2;
    std::vector<Term> terms;
};

/// 0 -> wedge^j S^dual -> wedge^j V (x) O -> ... -> V (x) S^{j-1}Q -> S^j Q -> 0, 1 <= j <= n-1.
TermList build_Rj(int j, int n);
/// 0 -> S^j Q(-j) -> V^* (x) S^{j-1}Q(-j+1) -> ... -> wedge^j V^* (x) O -> wedge^j S -> 0.
TermList build_Rj_dual(int j, int n);
/// The length-(2n-2) resolution of O(1) by O(-n), universal-bundle terms and evaluation.
TermList build_koszul(int n);

/// Parses "R:j", "Rdual:j" or "koszul".
TermList build_sequence(const std::string& id, int n);

struct ChiCheck {
    bool additive = false;
    std::vector<BigInt> chi;    ///< chi of each term (coefficient included)
    std::vector<BigInt> ranks;  ///< rank of each term (coefficient included)
    BigInt chi_sum;             ///< alternating sum of chi
    BigInt rank_sum;            ///< alternating sum of ranks
};

/// Alternating sums of chi and rank after tensoring every term by tensor_by
/// (if given) and twisting by `twist`; both must vanish on an exact sequence.
ChiCheck verify_chi_additivity(const TermList& t, const std::optional<IrredSum>& tensor_by, int twist);

struct DimInterval {
    BigInt lo;
    BigInt hi;

    bool exact() const { return lo == hi; }
    friend bool operator==(const DimInterval&, const DimInterval&) = default;
};

/// Bounds on h^i(E) for 0 -> A -> B -> E -> 0 from dimensions alone. The
/// ranks r_i of H^i(A) -> H^i(B) are unknown in [0, min(a_i, b_i)] except
/// r_0 = a_0. Throws std::invalid_argument when a_0 > b_0.
std::vector<DimInterval> les_hvec(const IrredSum& a, const IrredSum& b);

/// h^i(E) for explicit connecting ranks r_i (used to cross-check les_hvec).
std::vector<BigInt> les_dims_for_ranks(const IrredSum& a, const IrredSum& b, const std::vector<BigInt>& ranks);

enum class TriState { True, False, Undetermined };
std::string to_string(TriState t);

struct ExtensionWitness {
    std::string condition;
    int k;
    int degree;
    int sym_power;
    int twist;
    DimInterval dim;
};

struct ExtensionRegularity {
    TriState verdict = TriState::True;
    std::vector<ExtensionWitness> violations;    ///< groups certainly nonzero
    std::vector<ExtensionWitness> undetermined;  ///< groups whose interval straddles zero
};

/// G-regularity of E with 0 -> A -> B -> E -> 0.
ExtensionRegularity is_g_regular_extension(const IrredSum& a, const IrredSum& b);

struct ExtensionRegValue {
    TriState status = TriState::True;  ///< Undetermined if the scan met an undecidable twist
    int value = 0;
};
/// Least m with E(m) certainly G-regular and E(m-1) certainly not.
ExtensionRegValue g_reg_extension(const IrredSum& a, const IrredSum& b);

/// Euler sequence of the Pluecker space restricted to G, twisted by k:
/// A = O(k), B = O(k+1)^{binomial(n+1,2)}, so E = T_P|G(k).
std::pair<IrredSum, IrredSum> euler_extension(int n, int k);

} // namespace grc
