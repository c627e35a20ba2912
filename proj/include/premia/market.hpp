#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premia/principles.hpp"
#include "premia/sampler.hpp"

namespace premia {

// Frictionless market: a linear span of traded claims with a linear price
// functional. Must contain the constant claim 1 priced at 1; construction
// rejects arbitrage (a nonnegative traded claim with negative price).
struct MarketModel {
    StateSpace space;
    std::vector<Claim> basis;
    std::vector<double> prices;

    static MarketModel make(StateSpace space, std::vector<Claim> basis,
                            std::vector<double> prices, double tol = 1e-9);

    // linear extension F applied to a coefficient vector over the basis
    double price_of(const std::vector<double>& coeffs) const;
    Claim combine(const std::vector<double>& coeffs) const;
};

struct HedgeResult {
    double price = 0.0;           // cheapest safe cash amount
    std::vector<double> portfolio;  // coefficients over basis, zero total cost
};

// R_*(X) = inf{ m : exists zero-cost traded X0 with m + X0 >= X }, solved
// exactly as an LP. Unbounded below means no martingale measure exists.
HedgeResult superhedge(const MarketModel& mkt, const Claim& x);

bool martingale_membership(const MarketModel& mkt, const DiscreteMeasure& q,
                           double tol = 1e-9);

// All vertices of { q in simplex : E_q B_j = price_j } via basic feasible
// solutions; exact for desk-scale n.
std::vector<DiscreteMeasure> enumerate_martingale_measures(const MarketModel& mkt,
                                                           double tol = 1e-9);

// Three-way market-consistency diagnostic for sublinear H with H|_M = F:
// (i) R_Max = R_* on sampled claims, (ii) every claim is dominated by a
// traded claim priced within H, (iii) plausible models = martingale
// measures on sampled/enumerated measures.
struct ConsistencyReport {
    bool precondition_ok = false;   // H agrees with F on sampled M elements
    std::string precondition_note;
    bool rmax_equals_superhedge = false;
    bool dominating_traded_claim = false;
    bool models_match_martingales = false;
    bool agree = false;             // the three statements coincide
    int claims_tested = 0;
};

ConsistencyReport consistency_check(const PremiumPrinciple& h, const MarketModel& mkt,
                                    std::uint64_t seed = 12345, double tol = 1e-6);

} // namespace premia
