#include "premia/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "premia/lp.hpp"
#include "premia/solvers.hpp"

namespace premia {

namespace {

// --- exact dual-set maximizers, one per sublinear family -------------------

// max E_q[X] - (1/(2 theta)) var_P(dq/dP): water-filling density
// z_i = max(0, 1 + theta (x_i - lambda)) with lambda fixed by E_P[z] = 1.
double variance_gini_r_max(const DiscreteMeasure& p, const Claim& x, double theta) {
    const int n = x.size();
    auto mass = [&](double lambda) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += p[i] * std::max(0.0, 1.0 + theta * (x[i] - lambda));
        return s;
    };
    double lo = x.inf() - 1.0, hi = x.sup() + 1.0 / theta + 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (mass(mid) >= 1.0 ? lo : hi) = mid;
    }
    double lambda = 0.5 * (lo + hi);
    double value = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = std::max(0.0, 1.0 + theta * (x[i] - lambda));
        value += p[i] * z * x[i] - p[i] * (z - 1.0) * (z - 1.0) / (2.0 * theta);
    }
    return value;
}

// max E_q[X] over a density box lo_i <= q_i <= hi_i, sum q = 1: start at the
// lower bounds and pour the remaining mass into the largest outcomes first.
double density_box_max(const Claim& x, std::vector<double> lo, std::vector<double> hi) {
    const int n = x.size();
    double rest = 1.0;
    for (double l : lo) rest -= l;
    if (rest < -1e-12) throw NumericError("density box: lower bounds exceed unit mass");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] > x[b]; });
    double value = 0.0;
    for (int i = 0; i < n; ++i) value += lo[i] * x[i];
    for (int i : idx) {
        double add = std::min(rest, hi[i] - lo[i]);
        value += add * x[i];
        rest -= add;
        if (rest <= 1e-15) break;
    }
    return value;
}

// max E_q[X] over { q in simplex : q_i/p_i - q_j/p_j <= 2 theta }.
double spread_polytope_max(const DiscreteMeasure& p, const Claim& x, double theta) {
    const int n = x.size();
    LpProblem lp(n);
    for (int i = 0; i < n; ++i) {
        lp.c[i] = -x[i];  // solve_lp minimizes
        lp.lower[i] = 0.0;
    }
    lp.add_eq(std::vector<double>(n, 1.0), 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<double> a(n, 0.0);
            a[i] = 1.0 / p[i];
            a[j] = -1.0 / p[j];
            lp.add_le(std::move(a), 2.0 * theta);
        }
    LpSolution s = solve_lp(lp);
    if (s.status != LpStatus::Optimal) throw NumericError("spread polytope LP failed");
    return -s.objective;
}

// max E_q[X] over { q in simplex : sd_P(dq/dP) <= theta } by support-set
// enumeration: on the optimal support the density is affine in x.
double variance_ball_max(const DiscreteMeasure& p, const Claim& x, double theta) {
    const int n = x.size();
    if (n > 20) throw ValidationError("variance-ball dual limited to n <= 20");
    double best = -std::numeric_limits<double>::infinity();
    for (unsigned s = 1; s < (1u << n); ++s) {
        double m = 0.0, mx = 0.0;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) {
                m += p[i];
                mx += p[i] * x[i];
            }
        if (m <= 1e-15) continue;
        double mu = mx / m;
        double v = 0.0;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) v += p[i] * (x[i] - mu) * (x[i] - mu);
        double base_var = (1.0 - m) / m;  // var of the flat density 1/m on s
        if (theta * theta < base_var - 1e-12) continue;
        double b = 0.0;
        if (v > 1e-15) b = std::sqrt(std::max(0.0, theta * theta - base_var) / v);
        bool feasible = true;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i))
                if (1.0 / m + b * (x[i] - mu) < -1e-12) feasible = false;
        if (!feasible) continue;
        best = std::max(best, mu + b * v);
    }
    return best;
}

// max E_q[X] over conv{ P + (theta/2)(Q_j - Q_k) } intersected with the
// nonnegative orthant, via the generator LP.
double generator_polytope_max(const DiscreteMeasure& p,
                              const std::vector<DiscreteMeasure>& models,
                              const Claim& x, double theta) {
    const int n = x.size();
    const int m = (int)models.size();
    const int nl = m * m;
    LpProblem lp(n + nl);  // q then lambda
    for (int i = 0; i < n; ++i) {
        lp.c[i] = -x[i];
        lp.lower[i] = 0.0;
    }
    for (int l = 0; l < nl; ++l) lp.lower[n + l] = 0.0;
    for (int i = 0; i < n; ++i) {
        std::vector<double> a(n + nl, 0.0);
        a[i] = 1.0;
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                a[n + j * m + k] = -(p[i] + 0.5 * theta * (models[j][i] - models[k][i]));
        lp.add_eq(std::move(a), 0.0);
    }
    std::vector<double> ones(n + nl, 0.0);
    for (int l = 0; l < nl; ++l) ones[n + l] = 1.0;
    lp.add_eq(std::move(ones), 1.0);
    LpSolution s = solve_lp(lp);
    if (s.status != LpStatus::Optimal) throw NumericError("generator polytope LP failed");
    return -s.objective;
}

// max E_q[X] over the core of the distorted capacity: permutation vertices
// q_{pi(i)} = gamma(first i) - gamma(first i-1).
double core_vertex_max(const Capacity& cap, const Claim& x) {
    const int n = x.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto value_of = [&](const std::vector<int>& pi) {
        double val = 0.0;
        std::uint32_t set = 0;
        double prev = 0.0;
        for (int i : pi) {
            set |= (1u << i);
            double cur = cap.at(set);
            val += (cur - prev) * x[i];
            prev = cur;
        }
        return val;
    };
    if (n <= 6) {
        double best = -std::numeric_limits<double>::infinity();
        std::sort(perm.begin(), perm.end());
        do best = std::max(best, value_of(perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    // concave distortions attain the maximum on the descending-x ordering
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return x[a] > x[b]; });
    return value_of(perm);
}

// RobustVariance via the minimax over pair weights: for lambda on pairs
// (j,k), the inner problem min_{Y>=X} E_{mix(j)}[Y] + theta var_{mix(k)}[Y]
// is smooth; the outer concave maximization runs over the pair simplex.
double robust_variance_dual(const PremiumPrinciple& h, const Claim& x,
                            const SolveConfig& cfg) {
    const auto& models = h.config().model_set;
    const double theta = h.config().theta;
    const int n = x.size();
    const int m = (int)models.size();
    const double margin = cfg.margin_for(x);
    std::vector<double> ylo(x.values), yhi(n);
    for (int i = 0; i < n; ++i) yhi[i] = x[i] + margin;

    auto inner = [&](const std::vector<double>& lambda) {
        std::vector<double> a(m, 0.0), w(m, 0.0);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                a[j] += lambda[j * m + k];
                w[k] += lambda[j * m + k];
            }
        auto f = [&](const std::vector<double>& y) {
            double val = 0.0;
            for (int j = 0; j < m; ++j) {
                if (a[j] != 0.0) {
                    double e = 0.0;
                    for (int i = 0; i < n; ++i) e += models[j][i] * y[i];
                    val += a[j] * e;
                }
                if (w[j] != 0.0) {
                    double mean = 0.0, var = 0.0;
                    for (int i = 0; i < n; ++i) mean += models[j][i] * y[i];
                    for (int i = 0; i < n; ++i)
                        var += models[j][i] * (y[i] - mean) * (y[i] - mean);
                    val += theta * w[j] * var;
                }
            }
            return val;
        };
        DescentOptions opt;
        opt.tol = 1e-10;
        opt.nonsmooth_fallback = false;  // smooth quadratic objective
        DescentResult r = minimize_box(f, x.values, ylo, yhi, opt);
        return r.value;
    };

    DescentOptions outer;
    outer.tol = 1e-10;
    std::vector<double> l0(m * m, 1.0 / (m * m));
    DescentResult r = maximize_simplex(inner, l0, outer);
    return r.value;
}

// Kelley cutting planes for a generic sublinear member: outer LP over the
// cut set, separation by concave maximization over the unit box.
double kelley_dual(const PremiumPrinciple& h, const Claim& x, const SolveConfig& cfg) {
    const int n = x.size();
    std::vector<std::pair<Claim, double>> cuts;  // E_q[D] <= H(D)
    auto add_cut = [&](Claim d) {
        cuts.emplace_back(d, h.evaluate(d));
    };
    for (int i = 0; i < n; ++i) {
        Claim e = Claim::constant(n, 0.0);
        e[i] = 1.0;
        add_cut(e);
        e[i] = -1.0;
        add_cut(e);
    }

    double value = 0.0;
    for (int round = 0; round < 200; ++round) {
        LpProblem lp(n);
        for (int i = 0; i < n; ++i) {
            lp.c[i] = -x[i];
            lp.lower[i] = 0.0;
        }
        lp.add_eq(std::vector<double>(n, 1.0), 1.0);
        for (const auto& [d, bound] : cuts) lp.add_le(d.values, bound);
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal) throw NumericError("cutting-plane LP failed");
        value = -s.objective;

        // separation: max_{|Y|inf <= 1} E_q[Y] - H(Y), concave
        auto viol = [&](const std::vector<double>& y) {
            double e = 0.0;
            for (int i = 0; i < n; ++i) e += s.x[i] * y[i];
            return -(e - h.evaluate(Claim(y)));
        };
        std::vector<double> lo(n, -1.0), hi(n, 1.0);
        DescentOptions opt;
        opt.tol = 1e-11;
        DescentResult best;
        best.value = 0.0;
        for (int start = 0; start < 3; ++start) {
            std::vector<double> y0(n, 0.0);
            if (start == 1) {
                double mean = 0.0;
                for (int i = 0; i < n; ++i) mean += s.x[i] * x[i];
                for (int i = 0; i < n; ++i) y0[i] = x[i] > mean ? 1.0 : -1.0;
            }
            if (start == 2)
                for (int i = 0; i < n; ++i) y0[i] = (i % 2 ? 1.0 : -1.0);
            DescentResult r = minimize_box(viol, y0, lo, hi, opt);
            if (r.value < best.value) best = r;
        }
        if (-best.value <= cfg.tol * 0.1) return value;
        add_cut(Claim(best.x));
    }
    return value;
}

// Analytic conjugate where the catalog admits one; nullopt otherwise.
// Infinite values come back with finite=false.
std::optional<ConjugateValue> analytic_conjugate(const PremiumPrinciple& h,
                                                 const DiscreteMeasure& q) {
    using K = PrincipleKind;
    const PrincipleConfig& c = h.config();
    const int n = q.size();
    auto singleton = [&](const DiscreteMeasure& p) {
        ConjugateValue v;
        for (int i = 0; i < n; ++i)
            if (std::abs(q[i] - p[i]) > 1e-9) {
                v.finite = false;
                return v;
            }
        v.value = 0.0;
        return v;
    };
    switch (c.kind) {
        case K::Fair: return singleton(*c.baseline);
        case K::Economic: return singleton(*h.economic_measure());
        case K::Variance: {
            ConjugateValue v;
            double var = 0.0;
            for (int i = 0; i < n; ++i) {
                if ((*c.baseline)[i] <= 1e-15) {
                    if (q[i] > 1e-12) {
                        v.finite = false;
                        return v;
                    }
                    continue;
                }
                double z = q[i] / (*c.baseline)[i];
                var += (*c.baseline)[i] * (z - 1.0) * (z - 1.0);
            }
            if (c.theta == 0.0) return singleton(*c.baseline);
            v.value = var / (2.0 * c.theta);
            return v;
        }
        default:
            break;
    }
    if (h.flags().sublinear) {
        // zero-or-infinity dichotomy: decide by an exact membership check
        // when the dual set has a closed description
        ConjugateValue v;
        switch (c.kind) {
            case K::WorstCase:
                v.value = 0.0;
                return v;
            case K::AVaR: {
                for (int i = 0; i < n; ++i)
                    if (q[i] > (*c.baseline)[i] / c.epsilon + 1e-9) v.finite = false;
                return v;
            }
            case K::AbsoluteDeviation: {
                for (int i = 0; i < n; ++i) {
                    double lo = std::max(0.0, 1.0 - c.theta) * (*c.baseline)[i];
                    double hi = (1.0 + c.theta) * (*c.baseline)[i];
                    if (q[i] < lo - 1e-9 || q[i] > hi + 1e-9) v.finite = false;
                }
                return v;
            }
            case K::MeanAbsDev: {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (q[i] / (*c.baseline)[i] - q[j] / (*c.baseline)[j] >
                            2.0 * c.theta + 1e-9)
                            v.finite = false;
                return v;
            }
            default:
                return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace

ConjugateValue conjugate(const PremiumPrinciple& h, const DiscreteMeasure& q,
                         const SolveConfig& cfg) {
    if (!h.flags().convex)
        throw ValidationError("conjugate requires a convex principle");
    require_same_space(q, Claim::constant(h.space().n, 0.0));

    const int n = h.space().n;
    auto neg = [&](const std::vector<double>& y) {
        double e = 0.0;
        for (int i = 0; i < n; ++i) e += q[i] * y[i];
        return -(e - h.evaluate(Claim(y)));
    };

    const double b0 = cfg.box_margin > 0.0 ? cfg.box_margin : 4.0;
    double vals[3] = {0.0, 0.0, 0.0};
    ConjugateValue out;
    int step = 0;
    for (double b : {b0, 2.0 * b0, 4.0 * b0}) {
        std::vector<double> lo(n, -b), hi(n, b);
        DescentOptions opt;
        opt.tol = 1e-11;
        DescentResult best;
        best.value = 0.0;  // Y = 0 gives E_q[0] - H(0) = 0
        best.x.assign(n, 0.0);
        for (int start = 0; start < 2; ++start) {
            std::vector<double> y0(n, 0.0);
            if (start == 1)
                for (int i = 0; i < n; ++i) y0[i] = 0.5 * b * (i % 2 ? 1.0 : -1.0);
            DescentResult r = minimize_box(neg, y0, lo, hi, opt);
            if (r.value < best.value) best = r;
        }
        vals[step++] = -best.value;
        out.value = -best.value;
        out.witness = Claim(best.x);
        if (out.value > 1e6) {
            out.finite = false;
            return out;
        }
    }
    // still growing after two box expansions -> unbounded
    if (vals[2] > vals[1] + 1e-4) out.finite = false;
    return out;
}

double dual_r_max(const PremiumPrinciple& h, const Claim& x, const SolveConfig& cfg) {
    using K = PrincipleKind;
    if (!h.flags().convex)
        throw ValidationError("dual_r_max requires a convex principle");
    const PrincipleConfig& c = h.config();
    const int n = x.size();

    switch (c.kind) {
        case K::Fair:
            return dot(*c.baseline, x);
        case K::Economic:
            return dot(*h.economic_measure(), x);
        case K::WorstCase:
            return x.sup();
        case K::Variance:
            if (c.theta == 0.0) return dot(*c.baseline, x);
            return variance_gini_r_max(*c.baseline, x, c.theta);
        case K::StdDev:
            if (c.theta == 0.0) return dot(*c.baseline, x);
            return variance_ball_max(*c.baseline, x, c.theta);
        case K::MeanAbsDev:
            return spread_polytope_max(*c.baseline, x, c.theta);
        case K::LpDeviation:
            if (c.theta == 0.0) return dot(*c.baseline, x);
            if (c.p == 1.0) return spread_polytope_max(*c.baseline, x, c.theta);
            if (c.p == 2.0) return variance_ball_max(*c.baseline, x, c.theta);
            return kelley_dual(h, x, cfg);  // approximate for other exponents
        case K::RobustVariance:
            if (c.theta == 0.0) {
                double best = -std::numeric_limits<double>::infinity();
                for (const auto& q : c.model_set) best = std::max(best, dot(q, x));
                return best;
            }
            return robust_variance_dual(h, x, cfg);
        case K::MaxminExpectedLoss: {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& q : c.model_set) best = std::max(best, dot(q, x));
            return best;
        }
        case K::SmoothAmbiguity: {
            double acc = 0.0;
            for (std::size_t j = 0; j < c.model_set.size(); ++j)
                acc += c.second_order_weights[j] * dot(c.model_set[j], x);
            return acc;
        }
        case K::AmbiguityIndex:
            return generator_polytope_max(*c.baseline, c.model_set, x, c.theta);
        case K::AVaR: {
            std::vector<double> lo(n, 0.0), hi(n);
            for (int i = 0; i < n; ++i) hi[i] = (*c.baseline)[i] / c.epsilon;
            return density_box_max(x, lo, hi);
        }
        case K::AbsoluteDeviation: {
            std::vector<double> lo(n), hi(n);
            for (int i = 0; i < n; ++i) {
                lo[i] = std::max(0.0, 1.0 - c.theta) * (*c.baseline)[i];
                hi[i] = (1.0 + c.theta) * (*c.baseline)[i];
            }
            return density_box_max(x, lo, hi);
        }
        case K::ChoquetDistortion:
            return core_vertex_max(distort(*c.baseline, *c.distortion), x);
        case K::Quantile:
            break;
    }
    throw ValidationError("no dual representation available for " + to_string(c.kind));
}

MembershipResult plausible_membership(const PremiumPrinciple& h, const DiscreteMeasure& q,
                                      ClaimSampler& directions, double tol) {
    if (!h.flags().sublinear)
        throw ValidationError("plausible_membership requires a sublinear principle");
    const int n = h.space().n;
    require_same_space(q, Claim::constant(n, 0.0));

    std::vector<Claim> dirs;
    for (int i = 0; i < n; ++i) {
        Claim e = Claim::constant(n, 0.0);
        e[i] = 1.0;
        dirs.push_back(e);
        e[i] = -1.0;
        dirs.push_back(e);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Claim d = Claim::constant(n, 0.0);
            d[i] = 1.0;
            d[j] = -1.0;
            dirs.push_back(d);
        }
    }
    for (const Claim& c : directions.corner_cases()) dirs.push_back(c);
    for (int t = 0; t < 1000; ++t) dirs.push_back(directions.next_direction());

    MembershipResult res;
    res.worst_violation = -std::numeric_limits<double>::infinity();
    for (const Claim& d : dirs) {
        double gap = dot(q, d) - h.evaluate(d);
        if (gap > res.worst_violation) {
            res.worst_violation = gap;
            res.witness = d;
        }
    }
    res.member = res.worst_violation <= tol;
    return res;
}

double model_deviation(const PremiumPrinciple& h, const DiscreteMeasure& p, const Claim& x) {
    return h.evaluate(x - dot(p, x));
}

namespace {

// vertices of { q : sum q = 1, A q <= b } by active-set enumeration (n <= 6)
std::vector<DiscreteMeasure> vertices_of(int n,
                                         const std::vector<std::vector<double>>& a,
                                         const std::vector<double>& b) {
    const int m = (int)a.size();
    std::vector<DiscreteMeasure> out;
    std::vector<int> pick(n - 1);

    auto solve_point = [&](const std::vector<int>& rows) -> std::optional<std::vector<double>> {
        // rows: n-1 active inequalities plus the simplex equality
        std::vector<std::vector<double>> mat(n, std::vector<double>(n + 1, 0.0));
        for (int r = 0; r < n - 1; ++r) {
            for (int j = 0; j < n; ++j) mat[r][j] = a[rows[r]][j];
            mat[r][n] = b[rows[r]];
        }
        for (int j = 0; j < n; ++j) mat[n - 1][j] = 1.0;
        mat[n - 1][n] = 1.0;
        for (int col = 0; col < n; ++col) {  // Gaussian elimination, partial pivot
            int piv = -1;
            double bestabs = 1e-10;
            for (int r = col; r < n; ++r)
                if (std::abs(mat[r][col]) > bestabs) {
                    bestabs = std::abs(mat[r][col]);
                    piv = r;
                }
            if (piv < 0) return std::nullopt;
            std::swap(mat[col], mat[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = mat[r][col] / mat[col][col];
                if (f == 0.0) continue;
                for (int j = col; j <= n; ++j) mat[r][j] -= f * mat[col][j];
            }
        }
        std::vector<double> qv(n);
        for (int j = 0; j < n; ++j) qv[j] = mat[j][n] / mat[j][j];
        return qv;
    };

    auto feasible = [&](const std::vector<double>& qv) {
        for (int r = 0; r < m; ++r) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += a[r][j] * qv[j];
            if (lhs > b[r] + 1e-8) return false;
        }
        return true;
    };

    auto known = [&](const std::vector<double>& qv) {
        for (const auto& w : out) {
            double d = 0.0;
            for (int j = 0; j < n; ++j) d = std::max(d, std::abs(w[j] - qv[j]));
            if (d < 1e-8) return true;
        }
        return false;
    };

    // iterate over all (n-1)-subsets of the inequality rows
    std::vector<int> comb(n - 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n - 1) {
            if (auto qv = solve_point(comb))
                if (feasible(*qv) && !known(*qv)) {
                    for (double& v : *qv) v = std::max(0.0, v);
                    double s = std::accumulate(qv->begin(), qv->end(), 0.0);
                    for (double& v : *qv) v /= s;
                    out.push_back(DiscreteMeasure::make(*qv));
                }
            return;
        }
        for (int r = start; r < m; ++r) {
            comb[depth] = r;
            rec(r + 1, depth + 1);
        }
    };
    if (n == 1) {
        out.push_back(DiscreteMeasure::make({1.0}));
        return out;
    }
    rec(0, 0);
    (void)pick;
    return out;
}

std::vector<std::vector<double>> nonneg_rows(int n) {
    std::vector<std::vector<double>> a;
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(n, 0.0);
        row[i] = -1.0;  // -q_i <= 0
        a.push_back(std::move(row));
    }
    return a;
}

} // namespace

ModelSetDescription enumerate_plausible_set(const PremiumPrinciple& h) {
    using K = PrincipleKind;
    const PrincipleConfig& c = h.config();
    const int n = h.space().n;
    ModelSetDescription out;

    auto box_vertices = [&](const std::vector<double>& lo, const std::vector<double>& hi) {
        auto a = nonneg_rows(n);
        std::vector<double> b(n, 0.0);
        for (int i = 0; i < n; ++i) {
            std::vector<double> up(n, 0.0), dn(n, 0.0);
            up[i] = 1.0;
            a.push_back(up);
            b.push_back(hi[i]);
            dn[i] = -1.0;
            a.push_back(dn);
            b.push_back(-lo[i]);
        }
        return vertices_of(n, a, b);
    };

    switch (c.kind) {
        case K::Fair:
            out.members = {*c.baseline};
            out.exact = true;
            return out;
        case K::Economic:
            out.members = {*h.economic_measure()};
            out.exact = true;
            return out;
        case K::WorstCase: {
            for (int i = 0; i < n; ++i) {
                std::vector<double> e(n, 0.0);
                e[i] = 1.0;
                out.members.push_back(DiscreteMeasure::make(std::move(e)));
            }
            out.exact = true;
            return out;
        }
        case K::MaxminExpectedLoss:
            if (h.flags().sublinear) {
                out.members = c.model_set;
                out.exact = true;
                return out;
            }
            break;
        case K::SmoothAmbiguity:
            if (h.flags().sublinear) {
                std::vector<double> w(n, 0.0);
                for (std::size_t j = 0; j < c.model_set.size(); ++j)
                    for (int i = 0; i < n; ++i)
                        w[i] += c.second_order_weights[j] * c.model_set[j][i];
                out.members = {DiscreteMeasure::make(std::move(w))};
                out.exact = true;
                return out;
            }
            break;
        case K::AVaR:
            if (n <= 6) {
                std::vector<double> lo(n, 0.0), hi(n);
                for (int i = 0; i < n; ++i) hi[i] = (*c.baseline)[i] / c.epsilon;
                out.members = box_vertices(lo, hi);
                out.exact = true;
                return out;
            }
            break;
        case K::AbsoluteDeviation:
            if (n <= 6) {
                std::vector<double> lo(n), hi(n);
                for (int i = 0; i < n; ++i) {
                    lo[i] = std::max(0.0, 1.0 - c.theta) * (*c.baseline)[i];
                    hi[i] = (1.0 + c.theta) * (*c.baseline)[i];
                }
                out.members = box_vertices(lo, hi);
                out.exact = true;
                return out;
            }
            break;
        case K::MeanAbsDev:
            if (n <= 6) {
                auto a = nonneg_rows(n);
                std::vector<double> b(n, 0.0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (i == j) continue;
                        std::vector<double> row(n, 0.0);
                        row[i] = 1.0 / (*c.baseline)[i];
                        row[j] = -1.0 / (*c.baseline)[j];
                        a.push_back(std::move(row));
                        b.push_back(2.0 * c.theta);
                    }
                out.members = vertices_of(n, a, b);
                out.exact = true;
                return out;
            }
            break;
        case K::ChoquetDistortion:
            if (h.flags().sublinear && n <= 6) {
                Capacity cap = distort(*c.baseline, *c.distortion);
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<double> q(n, 0.0);
                    std::uint32_t set = 0;
                    double prev = 0.0;
                    for (int i : perm) {
                        set |= (1u << i);
                        double cur = cap.at(set);
                        q[i] = std::max(0.0, cur - prev);
                        prev = cur;
                    }
                    double s = std::accumulate(q.begin(), q.end(), 0.0);
                    for (double& v : q) v /= s;
                    DiscreteMeasure cand = DiscreteMeasure::make(q);
                    bool dup = false;
                    for (const auto& w : out.members) {
                        double d = 0.0;
                        for (int i = 0; i < n; ++i) d = std::max(d, std::abs(w[i] - cand[i]));
                        if (d < 1e-10) dup = true;
                    }
                    if (!dup) out.members.push_back(std::move(cand));
                } while (std::next_permutation(perm.begin(), perm.end()));
                out.exact = true;
                return out;
            }
            break;
        case K::AmbiguityIndex:
            if (n <= 6 && c.model_set.size() <= 3) {
                // vertices in generator-weight space mapped through the
                // generators P + (theta/2)(Q_j - Q_k), then truncated at 0
                const int m = (int)c.model_set.size();
                const int d = m * m;
                std::vector<std::vector<double>> gens(d, std::vector<double>(n));
                for (int j = 0; j < m; ++j)
                    for (int k = 0; k < m; ++k)
                        for (int i = 0; i < n; ++i)
                            gens[j * m + k][i] = (*c.baseline)[i] +
                                0.5 * c.theta * (c.model_set[j][i] - c.model_set[k][i]);
                // constraints in lambda space: lambda >= 0 and (G lambda)_i >= 0
                std::vector<std::vector<double>> a;
                std::vector<double> b;
                for (int l = 0; l < d; ++l) {
                    std::vector<double> row(d, 0.0);
                    row[l] = -1.0;
                    a.push_back(std::move(row));
                    b.push_back(0.0);
                }
                for (int i = 0; i < n; ++i) {
                    std::vector<double> row(d);
                    for (int l = 0; l < d; ++l) row[l] = -gens[l][i];
                    a.push_back(std::move(row));
                    b.push_back(0.0);
                }
                for (const auto& lam : vertices_of(d, a, b)) {
                    std::vector<double> q(n, 0.0);
                    for (int l = 0; l < d; ++l)
                        for (int i = 0; i < n; ++i) q[i] += lam[l] * gens[l][i];
                    for (double& v : q) v = std::max(0.0, v);
                    double s = std::accumulate(q.begin(), q.end(), 0.0);
                    for (double& v : q) v /= s;
                    DiscreteMeasure cand = DiscreteMeasure::make(q);
                    bool dup = false;
                    for (const auto& w : out.members) {
                        double dd = 0.0;
                        for (int i = 0; i < n; ++i) dd = std::max(dd, std::abs(w[i] - cand[i]));
                        if (dd < 1e-8) dup = true;
                    }
                    if (!dup) out.members.push_back(std::move(cand));
                }
                out.exact = true;
                return out;
            }
            break;
        default:
            break;
    }

    // sample-based fallback: random simplex points absolutely continuous
    // w.r.t. the baseline when one exists
    std::mt19937_64 rng(271828);
    std::exponential_distribution<double> exp1(1.0);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> q(n);
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            q[i] = exp1(rng);
            if (c.baseline && (*c.baseline)[i] <= 1e-15) q[i] = 0.0;
            s += q[i];
        }
        for (double& v : q) v /= s;
        out.members.push_back(DiscreteMeasure::make(std::move(q)));
    }
    out.exact = false;
    return out;
}

double d_min_via_models(const PremiumPrinciple& h, const ModelSetDescription& models,
                        const Claim& x, const SolveConfig& cfg) {
    if (models.members.empty())
        throw ValidationError("d_min_via_models needs at least one member");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : models.members) {
        double pen;
        if (auto a = analytic_conjugate(h, q)) {
            if (!a->finite) continue;
            pen = a->value;
        } else if (h.flags().sublinear) {
            pen = 0.0;  // listed members of an exact description are plausible
        } else {
            ConjugateValue cv = conjugate(h, q, cfg);
            if (!cv.finite) continue;
            pen = cv.value;
        }
        best = std::min(best, model_deviation(h, q, x) + pen);
    }
    return best;
}

EquivalenceReport symmetry_center_check(const PremiumPrinciple& h,
                                        const ModelSetDescription& models,
                                        const DiscreteMeasure& center,
                                        std::uint64_t seed, int trials, double tol) {
    const int n = h.space().n;
    EquivalenceReport rep;

    // (ii): reflect every listed member through the center
    {
        ClaimSampler dirs(n, seed);
        rep.symmetric = true;
        for (const auto& q : models.members) {
            std::vector<double> r(n);
            bool nonneg = true;
            for (int i = 0; i < n; ++i) {
                r[i] = 2.0 * center[i] - q[i];
                if (r[i] < -1e-9) nonneg = false;
                r[i] = std::max(0.0, r[i]);
            }
            if (!nonneg) {
                rep.symmetric = false;
                break;
            }
            double s = std::accumulate(r.begin(), r.end(), 0.0);
            for (double& v : r) v /= s;
            MembershipResult mr =
                plausible_membership(h, DiscreteMeasure::make(r), dirs, tol);
            if (!mr.member) {
                rep.symmetric = false;
                break;
            }
        }
    }

    // dominance: every member absolutely continuous w.r.t. the center
    rep.dominated = true;
    for (const auto& q : models.members)
        for (int i = 0; i < n; ++i)
            if (q[i] > 1e-9 && center[i] <= 1e-15) rep.dominated = false;

    // (i), (iii), (iv) on random claims, with R_Max from the member list
    auto spread = [&](const Claim& x) {
        double lo = dot(models.members.front(), x), hi = lo;
        for (const auto& q : models.members) {
            double e = dot(q, x);
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        return std::make_pair(lo, hi);
    };

    ClaimSampler sampler(n, seed + 7);
    rep.mean_identity = rep.amb_identity = rep.deviation_identity = true;
    std::vector<Claim> pool = sampler.corner_cases();
    for (int t = 0; t < trials; ++t) pool.push_back(sampler.next());
    for (const Claim& x : pool) {
        auto [lo, hi] = spread(x);
        double r_max = hi, r_max_neg = -lo;
        double amb = 0.5 * (hi - lo);
        double mean_c = dot(center, x);
        if (std::abs(mean_c - 0.5 * (r_max - r_max_neg)) > tol) rep.mean_identity = false;
        if (std::abs(amb - (r_max - mean_c)) > tol) rep.amb_identity = false;
        double d_center = model_deviation(h, center, x);
        double d_min = h.evaluate(x) - r_max;
        if (std::abs(d_center - (d_min + amb)) > tol) rep.deviation_identity = false;
    }

    rep.agree = (rep.symmetric ==
                 (rep.mean_identity && rep.amb_identity && rep.deviation_identity));
    return rep;
}

} // namespace premia
