#include "premia/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "premia/lp.hpp"
#include "premia/solvers.hpp"

namespace premia {

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::ClosedForm: return "closed-form";
        case SolveMethod::PrimalDescent: return "primal-descent";
        case SolveMethod::DualLP: return "epigraph-lp";
    }
    return "?";
}

namespace {

// max_q E_q[X] - (1/(2 theta)) var_P(dq/dP) over the simplex. The optimal
// density is a water-filling profile z_i = max(0, 1 + theta (x_i - lambda))
// with lambda fixed by sum p_i z_i = 1.
double variance_r_max(const DiscreteMeasure& p, const Claim& x, double theta) {
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

// Epigraph LP for the piecewise-linear catalog members: minimize H(Y) over
// Y >= X using auxiliary variables. Returns the optimum and minimizer.
std::pair<double, Claim> epigraph_lp(const PremiumPrinciple& h, const Claim& x) {
    using K = PrincipleKind;
    const PrincipleConfig& c = h.config();
    const int n = x.size();
    const double inf = std::numeric_limits<double>::infinity();

    auto linear_case = [&](const DiscreteMeasure& q) {
        // min E_q[Y], Y >= X attains at Y = X
        return std::make_pair(dot(q, x), x);
    };

    switch (c.kind) {
        case K::Fair:
            return linear_case(*c.baseline);
        case K::Economic:
            return linear_case(*h.economic_measure());
        case K::SmoothAmbiguity: {
            std::vector<double> w(n, 0.0);
            for (std::size_t j = 0; j < c.model_set.size(); ++j)
                for (int i = 0; i < n; ++i)
                    w[i] += c.second_order_weights[j] * c.model_set[j][i];
            return linear_case(DiscreteMeasure::make(std::move(w)));
        }
        case K::Variance:  // theta == 0 when the pl flag is set
        case K::StdDev:
        case K::LpDeviation: {
            if (c.theta == 0.0) return linear_case(*c.baseline);
            break;  // LpDeviation p == 1 falls through to MeanAbsDev below
        }
        default:
            break;
    }

    const DiscreteMeasure* p = c.baseline ? &*c.baseline : nullptr;

    if (c.kind == K::MeanAbsDev ||
        (c.kind == K::LpDeviation && c.p == 1.0)) {
        // vars: Y(0..n-1), t(n..2n-1) with t_i >= |Y_i - E_p Y|
        LpProblem lp(2 * n);
        for (int i = 0; i < n; ++i) {
            lp.c[i] = (*p)[i];
            lp.c[n + i] = c.theta * (*p)[i];
            lp.lower[i] = x[i];
            lp.lower[n + i] = 0.0;
        }
        for (int i = 0; i < n; ++i) {
            std::vector<double> a(2 * n, 0.0), b(2 * n, 0.0);
            for (int j = 0; j < n; ++j) a[j] = (*p)[j];
            a[i] -= 1.0;
            a[n + i] = 1.0;  // t_i - Y_i + E_p Y >= 0
            lp.add_ge(a, 0.0);
            for (int j = 0; j < n; ++j) b[j] = -(*p)[j];
            b[i] += 1.0;
            b[n + i] = 1.0;  // t_i + Y_i - E_p Y >= 0
            lp.add_ge(b, 0.0);
        }
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal) throw NumericError("epigraph LP failed");
        return {s.objective, Claim(std::vector<double>(s.x.begin(), s.x.begin() + n))};
    }

    if (c.kind == K::AbsoluteDeviation) {
        // vars: Y(n), c(1), t(n) with t_i >= |Y_i - c|; the median minimizes
        // the mean absolute deviation, so minimizing jointly in c is exact
        LpProblem lp(2 * n + 1);
        for (int i = 0; i < n; ++i) {
            lp.c[i] = (*p)[i];
            lp.c[n + 1 + i] = c.theta * (*p)[i];
            lp.lower[i] = x[i];
            lp.lower[n + 1 + i] = 0.0;
        }
        for (int i = 0; i < n; ++i) {
            std::vector<double> a(2 * n + 1, 0.0), b(2 * n + 1, 0.0);
            a[i] = -1.0; a[n] = 1.0; a[n + 1 + i] = 1.0;  // t_i - Y_i + c >= 0
            lp.add_ge(a, 0.0);
            b[i] = 1.0; b[n] = -1.0; b[n + 1 + i] = 1.0;  // t_i + Y_i - c >= 0
            lp.add_ge(b, 0.0);
        }
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal) throw NumericError("epigraph LP failed");
        return {s.objective, Claim(std::vector<double>(s.x.begin(), s.x.begin() + n))};
    }

    if (c.kind == K::AVaR) {
        // Rockafellar-Uryasev: H(Y) = min_c c + (1/eps) E (Y - c)^+
        LpProblem lp(2 * n + 1);
        for (int i = 0; i < n; ++i) {
            lp.c[n + 1 + i] = (*p)[i] / c.epsilon;
            lp.lower[i] = x[i];
            lp.lower[n + 1 + i] = 0.0;
        }
        lp.c[n] = 1.0;
        for (int i = 0; i < n; ++i) {
            std::vector<double> a(2 * n + 1, 0.0);
            a[i] = -1.0; a[n] = 1.0; a[n + 1 + i] = 1.0;  // u_i - Y_i + c >= 0
            lp.add_ge(a, 0.0);
        }
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal) throw NumericError("epigraph LP failed");
        return {s.objective, Claim(std::vector<double>(s.x.begin(), s.x.begin() + n))};
    }

    if (c.kind == K::AmbiguityIndex) {
        // vars: Y(n), a (>= every model mean), b (<= every model mean)
        LpProblem lp(n + 2);
        for (int i = 0; i < n; ++i) {
            lp.c[i] = (*p)[i];
            lp.lower[i] = x[i];
        }
        lp.c[n] = 0.5 * c.theta;
        lp.c[n + 1] = -0.5 * c.theta;
        for (const auto& q : c.model_set) {
            std::vector<double> a(n + 2, 0.0), b(n + 2, 0.0);
            for (int i = 0; i < n; ++i) a[i] = -q[i];
            a[n] = 1.0;  // a - E_q Y >= 0
            lp.add_ge(a, 0.0);
            for (int i = 0; i < n; ++i) b[i] = q[i];
            b[n + 1] = -1.0;  // E_q Y - b >= 0
            lp.add_ge(b, 0.0);
        }
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal) throw NumericError("epigraph LP failed");
        return {s.objective, Claim(std::vector<double>(s.x.begin(), s.x.begin() + n))};
    }

    if (c.kind == K::MaxminExpectedLoss) {  // identity loss (pl flag)
        LpProblem lp(n + 1);
        lp.c[n] = 1.0;
        for (int i = 0; i < n; ++i) lp.lower[i] = x[i];
        for (const auto& q : c.model_set) {
            std::vector<double> a(n + 1, 0.0);
            for (int i = 0; i < n; ++i) a[i] = -q[i];
            a[n] = 1.0;
            lp.add_ge(a, 0.0);
        }
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal) throw NumericError("epigraph LP failed");
        return {s.objective, Claim(std::vector<double>(s.x.begin(), s.x.begin() + n))};
    }

    if (c.kind == K::WorstCase) return {x.sup(), Claim::constant(n, x.sup())};

    (void)inf;
    throw NumericError("no epigraph formulation for " + to_string(c.kind));
}

std::pair<double, Claim> descent_r_max(const PremiumPrinciple& h, const Claim& x,
                                       const SolveConfig& cfg) {
    const int n = x.size();
    double margin = cfg.margin_for(x);
    auto f = [&h](const std::vector<double>& y) { return h.evaluate(Claim(y)); };

    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<double> lo(x.values), hi(n);
        for (int i = 0; i < n; ++i) hi[i] = x[i] + margin;

        DescentOptions opt;
        opt.tol = cfg.tol * 1e-2;
        opt.max_iter = cfg.max_iter;

        // multistart: the claim itself and the box midpoint
        DescentResult best;
        best.value = std::numeric_limits<double>::infinity();
        for (double frac : {0.0, 0.5}) {
            std::vector<double> y0(n);
            for (int i = 0; i < n; ++i) y0[i] = x[i] + frac * margin;
            DescentResult r = minimize_box(f, std::move(y0), lo, hi, opt);
            if (r.value < best.value) best = std::move(r);
        }

        bool on_boundary = false;
        for (int i = 0; i < n; ++i)
            if (best.x[i] > hi[i] - 1e-6 * margin) on_boundary = true;
        if (!on_boundary) return {best.value, Claim(best.x)};
        margin *= 4.0;  // one expansion, then give up
    }
    throw NumericError("non-coercive instance: minimizer stuck on the search box boundary");
}

} // namespace

std::optional<double> r_max_closed_form(const PremiumPrinciple& h, const Claim& x) {
    using K = PrincipleKind;
    if (h.flags().monotone) return h.evaluate(x);
    const PrincipleConfig& c = h.config();
    if (c.kind == K::Variance && c.theta > 0.0)
        return variance_r_max(*c.baseline, x, c.theta);
    if (c.kind == K::AbsoluteDeviation && c.theta >= 1.0)
        return average_value_at_risk_loss(*c.baseline, x, 1.0 / (1.0 + c.theta));
    return std::nullopt;
}

std::pair<double, Claim> r_max_primal(const PremiumPrinciple& h, const Claim& x,
                                      const SolveConfig& cfg) {
    if (!h.flags().convex)
        throw ValidationError("r_max_primal requires a convex principle; "
                              "use the brute-force oracle for nonconvex kinds");
    if (h.flags().piecewise_linear) return epigraph_lp(h, x);
    return descent_r_max(h, x, cfg);
}

Decomposition decompose(const PremiumPrinciple& h, const Claim& x,
                        const SolveConfig& cfg) {
    Decomposition d;
    d.premium = h.evaluate(x);

    if (auto cf = r_max_closed_form(h, x)) {
        d.r_max = *cf;
        d.method = SolveMethod::ClosedForm;
        d.optimizer = x;  // monotone kinds attain at X; dual-based forms carry no witness
        d.gap = 0.0;
    } else if (h.flags().piecewise_linear) {
        auto [v, y] = epigraph_lp(h, x);
        d.r_max = v;
        d.optimizer = std::move(y);
        d.method = SolveMethod::DualLP;
        d.gap = 0.0;
    } else if (h.flags().convex) {
        auto [v, y] = descent_r_max(h, x, cfg);
        d.r_max = v;
        d.optimizer = std::move(y);
        d.method = SolveMethod::PrimalDescent;
        // crude stationarity estimate: improvement from one short projected step
        d.gap = cfg.tol;
    } else {
        throw ValidationError("decompose: " + to_string(h.kind()) +
                              " is neither monotone nor convex; use the oracle");
    }

    d.d_min = d.premium - d.r_max;
    return d;
}

namespace {

double stop_loss(const DiscreteMeasure& p, const std::vector<double>& y, double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += p[i] * std::max(0.0, y[i] - t);
    return s;
}

} // namespace

double r_max_generalized(const PremiumPrinciple& h, const Claim& x,
                         const MarketModel& m, ClaimOrder order,
                         const SolveConfig& cfg) {
    // (P1') additivity of H on the traded space, checked on sampled pairs
    {
        ClaimSampler s(x.size(), cfg.seed);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        for (int t = 0; t < 50; ++t) {
            std::vector<double> c(m.basis.size());
            for (double& v : c) v = coeff(s.rng());
            Claim traded = m.combine(c);
            Claim xr = s.next();
            Claim sum = xr;
            for (int i = 0; i < sum.size(); ++i) sum[i] += traded[i];
            double lhs = h.evaluate(sum);
            double rhs = h.evaluate(xr) + h.evaluate(traded);
            if (std::abs(lhs - rhs) > 1e-6)
                throw ValidationError("principle is not additive on the traded space");
        }
    }

    if (order == ClaimOrder::Pointwise) return decompose(h, x, cfg).r_max;

    // IncreasingConvex: Y dominates X when E_P (Y-t)^+ >= E_P (X-t)^+ at
    // every breakpoint of X (stop-loss transforms are piecewise linear).
    if (!h.config().baseline.has_value())
        throw ValidationError("increasing-convex order requires a baseline measure");
    const DiscreteMeasure& p = *h.config().baseline;

    if (h.kind() == PrincipleKind::Fair) return dot(p, x);  // smallest icx value
    if (std::abs(x.sup() - x.inf()) < 1e-15) return h.evaluate(x);

    std::vector<double> breaks(x.values);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<double> targets;
    for (double t : breaks) targets.push_back(stop_loss(p, x.values, t));
    double mean_target = dot(p, x);

    auto violation = [&](const std::vector<double>& y) {
        double v = std::max(0.0, mean_target - dot(p, Claim(y)));
        for (std::size_t k = 0; k < breaks.size(); ++k)
            v += std::max(0.0, targets[k] - stop_loss(p, y, breaks[k]));
        return v;
    };

    const double big = 1e4 * (1.0 + std::abs(h.evaluate(x)));
    auto penalized = [&](const std::vector<double>& y) {
        return h.evaluate(Claim(y)) + big * violation(y);
    };

    const int n = x.size();
    const double margin = cfg.margin_for(x);
    std::vector<double> lo(n, x.inf() - margin), hi(n, x.sup() + margin);
    DescentOptions opt;
    opt.tol = cfg.tol * 1e-2;

    double best = h.evaluate(x);  // Y = X is always feasible
    ClaimSampler starts(n, cfg.seed + 1, x.inf(), x.sup() + 1.0);
    std::vector<std::vector<double>> inits = {
        x.values, std::vector<double>(n, x.sup())};
    for (int t = 0; t < 6; ++t) inits.push_back(starts.next().values);
    for (auto& y0 : inits) {
        DescentResult r = minimize_box(penalized, y0, lo, hi, opt);
        if (violation(r.x) <= 1e-8 && r.value < best) best = r.value;
    }
    return best;
}

} // namespace premia
