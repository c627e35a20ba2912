#pragma once

#include <functional>
#include <vector>

#include "premia/errors.hpp"

namespace premia {

using VecFn = std::function<double(const std::vector<double>&)>;

// Euclidean projection onto the probability simplex {w >= 0, sum w = 1}.
std::vector<double> project_simplex(std::vector<double> v);

// Clip to [lo, hi] componentwise.
std::vector<double> project_box(std::vector<double> v,
                                const std::vector<double>& lo,
                                const std::vector<double>& hi);

// Central finite differences, h = base * (1 + |x|_inf).
std::vector<double> fd_gradient(const VecFn& f, const std::vector<double>& x,
                                double base = 1e-6);

struct DescentResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct DescentOptions {
    int max_iter = 100000;
    double tol = 1e-10;        // stationarity: |x_{k+1} - x_k|_inf
    double fd_step = 1e-6;
    double init_step = 1.0;
    bool nonsmooth_fallback = true;  // diminishing c/sqrt(k) restart pass
};

// Minimize f over a box with projected gradient steps: Barzilai-Borwein
// step sizes safeguarded by Armijo backtracking; optionally finishes with a
// diminishing-step pass for nonsmooth objectives. Gradients are numeric.
DescentResult minimize_box(const VecFn& f, std::vector<double> x0,
                           const std::vector<double>& lo,
                           const std::vector<double>& hi,
                           const DescentOptions& opt = {});

// Maximize f over the probability simplex (projected ascent, same engine).
DescentResult maximize_simplex(const VecFn& f, std::vector<double> x0,
                               const DescentOptions& opt = {});

} // namespace premia
