#include "premia/lp.hpp"

#include <algorithm>
#include <cmath>

namespace premia {

namespace {

constexpr double kEps = 1e-10;

} // namespace

LpSolution solve_lp(const LpProblem& prob) {
    const double inf = std::numeric_limits<double>::infinity();
    const int n0 = prob.num_vars;
    if ((int)prob.c.size() != n0 || (int)prob.lower.size() != n0 ||
        (int)prob.upper.size() != n0)
        throw ValidationError("LP: inconsistent sizes");
    for (const auto& r : prob.rows)
        if ((int)r.a.size() != n0) throw ValidationError("LP: row size mismatch");
    for (int j = 0; j < n0; ++j)
        if (prob.lower[j] > prob.upper[j] + kEps)
            return {LpStatus::Infeasible, 0.0, {}};

    // Convert to standard form: every variable nonnegative.
    // x_j = lower_j + u_j (finite lower), x_j = upper_j - u_j (finite upper
    // only), or x_j = u_j+ - u_j- (free). Track the mapping to undo later.
    struct VarMap {
        int col = -1;        // primary nonnegative column
        int neg_col = -1;    // second column for free variables
        double shift = 0.0;  // additive offset
        double sign = 1.0;   // +1 or -1 applied to col
        double cap = std::numeric_limits<double>::infinity();  // finite -> cap row below
    };
    std::vector<VarMap> vmap(n0);
    int ncols = 0;
    for (int j = 0; j < n0; ++j) {
        VarMap& v = vmap[j];
        if (prob.lower[j] > -inf) {
            v.col = ncols++;
            v.shift = prob.lower[j];
            v.sign = 1.0;
            if (prob.upper[j] < inf) v.cap = prob.upper[j] - prob.lower[j];
        } else if (prob.upper[j] < inf) {
            v.col = ncols++;
            v.shift = prob.upper[j];
            v.sign = -1.0;
        } else {
            v.col = ncols++;
            v.neg_col = ncols++;
        }
    }

    // Assemble rows: user rows plus cap rows, all as <= / >= / == with the
    // substitution applied. Work in doubles; desk scale keeps this exact
    // enough.
    struct StdRow {
        std::vector<double> a;
        double rhs;
        int sense;
    };
    std::vector<StdRow> rows;
    auto substitute = [&](const std::vector<double>& coeffs, double rhs, int sense) {
        StdRow r;
        r.a.assign(ncols, 0.0);
        r.rhs = rhs;
        r.sense = sense;
        for (int j = 0; j < n0; ++j) {
            double cj = coeffs[j];
            if (cj == 0.0) continue;
            const VarMap& v = vmap[j];
            r.a[v.col] += cj * v.sign;
            if (v.neg_col >= 0) r.a[v.neg_col] -= cj;
            r.rhs -= cj * v.shift;
        }
        rows.push_back(std::move(r));
    };
    for (const auto& r : prob.rows) substitute(r.a, r.rhs, r.sense);
    for (int j = 0; j < n0; ++j) {
        if (vmap[j].cap < inf) {
            StdRow r;
            r.a.assign(ncols, 0.0);
            r.a[vmap[j].col] = 1.0;
            r.rhs = vmap[j].cap;
            r.sense = -1;
            rows.push_back(std::move(r));
        }
    }

    // Objective in standard variables (constant term tracked separately).
    std::vector<double> cost(ncols, 0.0);
    double cost0 = 0.0;
    for (int j = 0; j < n0; ++j) {
        const VarMap& v = vmap[j];
        cost[v.col] += prob.c[j] * v.sign;
        if (v.neg_col >= 0) cost[v.neg_col] -= prob.c[j];
        cost0 += prob.c[j] * v.shift;
    }

    // Add slacks/surplus and artificials; build the phase-1 tableau.
    const int m = (int)rows.size();
    int nslack = 0;
    for (const auto& r : rows)
        if (r.sense != 0) ++nslack;
    const int ntot = ncols + nslack + m;  // artificials for every row
    std::vector<std::vector<double>> A(m, std::vector<double>(ntot, 0.0));
    std::vector<double> b(m);
    std::vector<int> basis(m);
    int scol = ncols;
    for (int i = 0; i < m; ++i) {
        double flip = rows[i].rhs < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < ncols; ++j) A[i][j] = flip * rows[i].a[j];
        b[i] = flip * rows[i].rhs;
        if (rows[i].sense == -1) A[i][scol++] = flip * 1.0;
        else if (rows[i].sense == +1) A[i][scol++] = flip * -1.0;
        A[i][ncols + nslack + i] = 1.0;
        basis[i] = ncols + nslack + i;
    }

    std::vector<double> obj(ntot + 1, 0.0);  // objective row; last entry = value

    auto pivot = [&](int pr, int pc) {
        double piv = A[pr][pc];
        for (int j = 0; j < ntot; ++j) A[pr][j] /= piv;
        b[pr] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == pr) continue;
            double f = A[i][pc];
            if (f == 0.0) continue;
            for (int j = 0; j < ntot; ++j) A[i][j] -= f * A[pr][j];
            b[i] -= f * b[pr];
        }
        double f = obj[pc];
        if (f != 0.0) {
            for (int j = 0; j < ntot; ++j) obj[j] -= f * A[pr][j];
            obj[ntot] -= f * b[pr];
        }
        basis[pr] = pc;
    };

    // Runs the simplex on the current objective row over columns < limit.
    // Returns false when unbounded.
    auto run = [&](int limit) -> bool {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < limit; ++j) {
                if (obj[j] < -kEps) { pc = j; break; }  // Bland: first index
            }
            if (pc < 0) return true;
            int pr = -1;
            for (int i = 0; i < m; ++i) {
                if (A[i][pc] > kEps) {
                    if (pr < 0) { pr = i; continue; }
                    double ri = b[i] / A[i][pc], rp = b[pr] / A[pr][pc];
                    if (ri < rp - kEps ||
                        (ri < rp + kEps && basis[i] < basis[pr]))
                        pr = i;  // Bland on leaving variable
                }
            }
            if (pr < 0) return false;
            pivot(pr, pc);
        }
    };

    // Phase 1: minimize sum of artificials.
    std::fill(obj.begin(), obj.end(), 0.0);
    for (int k = 0; k < m; ++k) obj[ncols + nslack + k] = 1.0;
    for (int i = 0; i < m; ++i) {
        // Make the objective row consistent with the starting basis.
        for (int j = 0; j < ntot; ++j) obj[j] -= A[i][j];
        obj[ntot] -= b[i];
    }
    run(ntot);
    if (obj[ntot] < -1e-7) return {LpStatus::Infeasible, 0.0, {}};

    // Drive artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
        if (basis[i] >= ncols + nslack) {
            int pc = -1;
            for (int j = 0; j < ncols + nslack; ++j)
                if (std::abs(A[i][j]) > kEps) { pc = j; break; }
            if (pc >= 0) pivot(i, pc);
            // else: redundant row, artificial stays at zero level
        }
    }

    // Phase 2.
    std::fill(obj.begin(), obj.end(), 0.0);
    for (int j = 0; j < ncols; ++j) obj[j] = cost[j];
    for (int i = 0; i < m; ++i) {
        double f = obj[basis[i]];
        if (f != 0.0) {
            for (int j = 0; j < ntot; ++j) obj[j] -= f * A[i][j];
            obj[ntot] -= f * b[i];
        }
    }
    if (!run(ncols + nslack)) return {LpStatus::Unbounded, 0.0, {}};

    std::vector<double> u(ntot, 0.0);
    for (int i = 0; i < m; ++i) u[basis[i]] = b[i];

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.resize(n0);
    for (int j = 0; j < n0; ++j) {
        const VarMap& v = vmap[j];
        double val = v.shift + v.sign * u[v.col];
        if (v.neg_col >= 0) val -= u[v.neg_col];
        sol.x[j] = val;
    }
    // Evaluate c.x directly rather than unwinding the offset bookkeeping.
    sol.objective = 0.0;
    for (int j = 0; j < n0; ++j) sol.objective += prob.c[j] * sol.x[j];
    (void)cost0;
    return sol;
}

} // namespace premia
