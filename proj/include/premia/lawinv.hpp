#pragma once

#include <optional>
#include <vector>

#include "premia/decompose.hpp"
#include "premia/principles.hpp"

namespace premia {

struct DominanceResult {
    bool dominated = true;       // H blind to P-null states
    bool vacuous = false;        // P has no null state
    std::optional<Claim> witness_before;
    std::optional<Claim> witness_after;
    bool r_max_inherits = true;  // checked only when H passes
};

// H should not react to changes on states with p_i = 0.
DominanceResult dominance_check(const PremiumPrinciple& h, const DiscreteMeasure& p,
                                int trials = 200, std::uint64_t seed = 12345,
                                double tol = 1e-9);

struct LawInvarianceResult {
    bool invariant = true;
    bool vacuous = false;        // no nontrivial admissible permutation
    std::optional<Claim> witness;
    std::vector<int> witness_permutation;
    bool r_max_inherits = true;  // checked only when H passes
};

// Invariance of H under state permutations preserving the law of the claim:
// all permutations for uniform P (all n! when n <= 6, else seeded random),
// restricted to equal-probability blocks otherwise.
LawInvarianceResult law_invariance_check(const PremiumPrinciple& h,
                                         const DiscreteMeasure& p, int trials = 200,
                                         std::uint64_t seed = 12345, double tol = 1e-9);

struct SafetyLoadingResult {
    bool holds = true;
    bool exploratory = false;  // H lacks the convex flag or failed law invariance
    std::optional<Claim> witness;
};

// H(X) >= E_P[X] on sampled claims.
SafetyLoadingResult safety_loading_check(const PremiumPrinciple& h,
                                         const DiscreteMeasure& p, int trials = 200,
                                         std::uint64_t seed = 12345, double tol = 1e-9);

} // namespace premia
