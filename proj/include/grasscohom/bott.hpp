#pragma once

#include <compare>
#include <optional>
#include <string>

#include "grasscohom/weights.hpp"

namespace grc {

/// Irreducible homogeneous bundle Sigma^alpha Q (x) Sigma^beta S^dual on G(1,n).
///
/// alpha has length 2 (the rank-2 quotient Q), beta has length n-1 (the dual
/// of the tautological subbundle). Standard encodings:
///   O(k)       = ((k,k); 0)
///   S^j Q      = ((j,0); 0)
///   S          = (0; (0,...,0,-1))
///   wedge^j S  = (0; (0^{n-1-j}, (-1)^j))
struct Irred {
    int n = 2;
    GLWeight alpha{0, 0};
    GLWeight beta{0};

    Irred() = default;
    Irred(int n, GLWeight alpha, GLWeight beta);

    static Irred line_bundle(int n, int k);

    BigInt rank() const { return weyl_dim(alpha) * weyl_dim(beta); }
    std::string str() const;

    friend auto operator<=>(const Irred&, const Irred&) = default;
    friend bool operator==(const Irred&, const Irred&) = default;
};

/// Cohomology of an Irred: zero, or a single GL_{n+1} module in one degree.
struct BottResult {
    int degree = 0;
    GLWeight lambda;
    BigInt dim;
};

std::optional<BottResult> bott(const Irred& x);

Irred twist(const Irred& x, int k);
Irred dual_irred(const Irred& x);

/// Tensors with (det V)^c: every entry of (alpha; beta) moves by c.
/// Cohomology dimensions are unchanged; the reported lambda moves by c.
Irred det_shift(const Irred& x, int c);

/// h^degree(x), zero when degree is not the Bott degree.
BigInt h(const Irred& x, int degree);

namespace testing {

/// Mutation hook for negative controls: while active, bott() misreports
/// degree n-1 as degree n-2.
class ScopedBottMutation {
public:
    ScopedBottMutation();
    ~ScopedBottMutation();
    ScopedBottMutation(const ScopedBottMutation&) = delete;
    ScopedBottMutation& operator=(const ScopedBottMutation&) = delete;
};

bool bott_mutation_active();

} // namespace testing

} // namespace grc
