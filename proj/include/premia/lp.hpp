#pragma once

#include <limits>
#include <vector>

#include "premia/errors.hpp"

namespace premia {

// Dense linear program
//   minimize c.x  subject to  row constraints and per-variable bounds.
// Sized for desk problems (tens of variables); two-phase simplex with
// Bland's rule, so it terminates without cycling.
struct LpRow {
    std::vector<double> a;
    double rhs = 0.0;
    int sense = 0;  // -1: <=, 0: ==, +1: >=
};

struct LpProblem {
    int num_vars = 0;
    std::vector<double> c;
    std::vector<LpRow> rows;
    std::vector<double> lower;  // -inf allowed
    std::vector<double> upper;  // +inf allowed

    explicit LpProblem(int n)
        : num_vars(n),
          c(n, 0.0),
          lower(n, -std::numeric_limits<double>::infinity()),
          upper(n, std::numeric_limits<double>::infinity()) {}

    void add_le(std::vector<double> a, double rhs) { rows.push_back({std::move(a), rhs, -1}); }
    void add_ge(std::vector<double> a, double rhs) { rows.push_back({std::move(a), rhs, +1}); }
    void add_eq(std::vector<double> a, double rhs) { rows.push_back({std::move(a), rhs, 0}); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

LpSolution solve_lp(const LpProblem& prob);

} // namespace premia
