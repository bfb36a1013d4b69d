#pragma once

#include <string>
#include <vector>

namespace grc {

/// Outcome of one machine-checked claim at one value of n.
struct ClaimResult {
    std::string id;
    std::string statement;
    int n;
    bool pass;
    std::string detail;  ///< first counterexample when failing, short summary otherwise
};

/// Runs every claim applicable to G(1,n) for n in [n_lo, n_hi] (2 <= n_lo <= n_hi <= 6).
std::vector<ClaimResult> verify_claims(int n_lo, int n_hi);

} // namespace grc
