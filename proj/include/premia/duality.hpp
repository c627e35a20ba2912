#pragma once

#include <optional>

#include "premia/decompose.hpp"
#include "premia/principles.hpp"
#include "premia/sampler.hpp"

namespace premia {

// H*(Q) = sup_X E_Q[X] - H(X), with a large-threshold convention for +inf.
struct ConjugateValue {
    double value = 0.0;
    bool finite = true;
    Claim witness;  // maximizer within the search box, when finite

    double penalty() const { return finite ? value : std::numeric_limits<double>::infinity(); }
};

ConjugateValue conjugate(const PremiumPrinciple& h, const DiscreteMeasure& q,
                         const SolveConfig& cfg = {});

// R_Max(X) = max_Q E_Q[X] - H*(Q), computed from member-specific exact dual
// descriptions (density boxes/bands, spread polytopes, permutation vertices,
// water-filling) -- deliberately independent of the primal solvers.
double dual_r_max(const PremiumPrinciple& h, const Claim& x,
                  const SolveConfig& cfg = {});

struct MembershipResult {
    bool member = false;
    double worst_violation = 0.0;  // max over directions of E_Q[X] - H(X)
    Claim witness;
};

// Support-function check of Q against the plausible set of a sublinear H:
// all +-indicators, indicator differences, and seeded random directions.
MembershipResult plausible_membership(const PremiumPrinciple& h, const DiscreteMeasure& q,
                                      ClaimSampler& directions, double tol = 1e-9);

// D_P(X) = H(X - E_P[X]).
double model_deviation(const PremiumPrinciple& h, const DiscreteMeasure& p, const Claim& x);

struct ModelSetDescription {
    std::vector<DiscreteMeasure> members;
    bool exact = false;  // vertex enumeration completed
};

// Vertices of the plausible set for polyhedral catalog members, n <= 6;
// falls back to sampled members with exact=false.
ModelSetDescription enumerate_plausible_set(const PremiumPrinciple& h);

// min over listed members of D_P(X) + H*(P); equals D_Min when the list
// contains the minimizer (vertex-enumerated polyhedral sets).
double d_min_via_models(const PremiumPrinciple& h, const ModelSetDescription& models,
                        const Claim& x, const SolveConfig& cfg = {});

// Center-symmetry equivalences for a sublinear H with vertex-listed
// plausible set: (ii) 2P - Q stays in the set; (i)/(iii)/(iv) numeric
// identities on random claims. The four must agree.
struct EquivalenceReport {
    bool symmetric = false;          // (ii), checked on the vertex list
    bool mean_identity = false;      // (i)  E_P X = (R_Max(X) - R_Max(-X))/2
    bool amb_identity = false;       // (iii) Amb = max E_Q X - E_P X
    bool deviation_identity = false; // (iv) D_P = D_Min + Amb
    bool dominated = false;          // every member << center
    bool agree = false;              // (ii) == ((i) && (iii) && (iv))
};

EquivalenceReport symmetry_center_check(const PremiumPrinciple& h,
                                        const ModelSetDescription& models,
                                        const DiscreteMeasure& center,
                                        std::uint64_t seed = 12345,
                                        int trials = 200, double tol = 1e-6);

} // namespace premia
