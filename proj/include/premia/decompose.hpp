#pragma once

#include <optional>

#include "premia/market.hpp"
#include "premia/principles.hpp"

namespace premia {

enum class SolveMethod { ClosedForm, PrimalDescent, DualLP };

std::string to_string(SolveMethod m);

// H(X) split into the largest monotone cash-additive part and the leftover
// deviation loading.
struct Decomposition {
    double premium = 0.0;
    double r_max = 0.0;
    double d_min = 0.0;
    Claim optimizer;          // near-optimal dominating claim X0 >= X
    SolveMethod method = SolveMethod::ClosedForm;
    double gap = 0.0;         // refinement / primal-dual gap estimate
};

struct SolveConfig {
    double tol = 1e-8;
    int max_iter = 100000;
    // search box above X: sup-side margin, 2*(sup X - inf X) + 1 when <= 0
    double box_margin = 0.0;
    std::uint64_t seed = 12345;

    double margin_for(const Claim& x) const {
        return box_margin > 0.0 ? box_margin : 2.0 * (x.sup() - x.inf()) + 1.0;
    }
};

enum class ClaimOrder { Pointwise, IncreasingConvex };

// inf{ H(Y) : Y >= X } by projected descent or an exact epigraph LP.
// Refuses principles without the convex flag.
std::pair<double, Claim> r_max_primal(const PremiumPrinciple& h, const Claim& x,
                                      const SolveConfig& cfg = {});

// Exact value where the catalog admits one: monotone kinds (H(X) itself),
// the variance loading (water-filling dual), and the absolute-deviation
// loading with theta >= 1 (upper-tail mean).
std::optional<double> r_max_closed_form(const PremiumPrinciple& h, const Claim& x);

Decomposition decompose(const PremiumPrinciple& h, const Claim& x,
                        const SolveConfig& cfg = {});

// Decomposition over a traded cash space M and a claim preorder. Requires H
// additive on sampled M pairs; Pointwise reduces to r_max_primal,
// IncreasingConvex constrains via stop-loss transforms at the breakpoints
// of X (heuristic multistart, exact fast paths for linear H and constants).
double r_max_generalized(const PremiumPrinciple& h, const Claim& x,
                         const MarketModel& m, ClaimOrder order,
                         const SolveConfig& cfg = {});

} // namespace premia
