#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "premia/principles.hpp"

namespace premia {

// Exhaustive lattice search used as an independent check on the analytic
// solvers. Deliberately dumb: enumerate every grid point, keep the best.
// The point count must stay below `max_points` (guards against accidental
// petascale loops).

struct OracleResult {
    double value = 0.0;
    std::vector<double> argmin;   // grid point achieving the optimum
    double error_bound = 0.0;     // L * step * sqrt(n) for L-Lipschitz objectives
    std::uint64_t points = 0;
};

struct OracleOptions {
    double step = 0.01;
    std::uint64_t max_points = 100000000;  // hard cap on lattice size
    bool parallel = true;                  // OpenMP kernel; serial reference otherwise
    bool refine = true;                    // second pass at step/10 near the optimum
};

// min over the product lattice of [lo_i, hi_i] of `f`. Ties break to the
// lexicographically smallest index vector, so serial and parallel runs
// agree bit-for-bit.
OracleResult lattice_minimize(const std::function<double(const std::vector<double>&)>& f,
                              const std::vector<double>& lo,
                              const std::vector<double>& hi,
                              const OracleOptions& opt = {});

// R_Max(X) = inf{ H(Y) : Y >= X } scanned over a payoff lattice above X.
OracleResult brute_r_max(const PremiumPrinciple& h, const Claim& x,
                         const OracleOptions& opt = {});

// Conjugate H*(Q) = sup_Y E_Q[Y] - H(Y) scanned over a growing payoff box;
// returns +infinity (and finite=false) when the scan keeps growing.
struct ConjugateScan {
    double value = 0.0;
    bool finite = true;
    std::vector<double> argmax;
    double error_bound = 0.0;  // lattice resolution of the final box
};
ConjugateScan brute_conjugate(const PremiumPrinciple& h, const DiscreteMeasure& q,
                              const OracleOptions& opt = {});

} // namespace premia
