#include "premia/principles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace premia {

std::string to_string(PrincipleKind kind) {
    switch (kind) {
        case PrincipleKind::Fair: return "Fair";
        case PrincipleKind::Variance: return "Variance";
        case PrincipleKind::StdDev: return "StdDev";
        case PrincipleKind::MeanAbsDev: return "MeanAbsDev";
        case PrincipleKind::LpDeviation: return "LpDeviation";
        case PrincipleKind::Economic: return "Economic";
        case PrincipleKind::RobustVariance: return "RobustVariance";
        case PrincipleKind::MaxminExpectedLoss: return "MaxminExpectedLoss";
        case PrincipleKind::SmoothAmbiguity: return "SmoothAmbiguity";
        case PrincipleKind::AmbiguityIndex: return "AmbiguityIndex";
        case PrincipleKind::Quantile: return "Quantile";
        case PrincipleKind::AVaR: return "AVaR";
        case PrincipleKind::AbsoluteDeviation: return "AbsoluteDeviation";
        case PrincipleKind::ChoquetDistortion: return "ChoquetDistortion";
        case PrincipleKind::WorstCase: return "WorstCase";
    }
    return "?";
}

PrincipleKind principle_kind_from_string(const std::string& name) {
    static const std::map<std::string, PrincipleKind> table = {
        {"Fair", PrincipleKind::Fair},
        {"Variance", PrincipleKind::Variance},
        {"StdDev", PrincipleKind::StdDev},
        {"MeanAbsDev", PrincipleKind::MeanAbsDev},
        {"LpDeviation", PrincipleKind::LpDeviation},
        {"Economic", PrincipleKind::Economic},
        {"RobustVariance", PrincipleKind::RobustVariance},
        {"MaxminExpectedLoss", PrincipleKind::MaxminExpectedLoss},
        {"SmoothAmbiguity", PrincipleKind::SmoothAmbiguity},
        {"AmbiguityIndex", PrincipleKind::AmbiguityIndex},
        {"Quantile", PrincipleKind::Quantile},
        {"AVaR", PrincipleKind::AVaR},
        {"AbsoluteDeviation", PrincipleKind::AbsoluteDeviation},
        {"ChoquetDistortion", PrincipleKind::ChoquetDistortion},
        {"WorstCase", PrincipleKind::WorstCase},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ValidationError("unknown principle kind: " + name);
    return it->second;
}

double ambiguity_index(const std::vector<DiscreteMeasure>& models, const Claim& x) {
    if (models.empty()) throw ValidationError("ambiguity index needs a nonempty model set");
    double lo = dot(models.front(), x);
    double hi = lo;
    for (const auto& q : models) {
        double e = dot(q, x);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return 0.5 * (hi - lo);
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

void check_measure_dim(const DiscreteMeasure& p, const StateSpace& space, const char* what) {
    if (p.size() != space.n)
        throw ValidationError(std::string(what) + " does not match the state space dimension");
}

double mean_abs_about(const DiscreteMeasure& p, const Claim& x, double center, double q) {
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) s += p[i] * std::pow(std::abs(x[i] - center), q);
    return s;
}

} // namespace

PremiumPrinciple build_principle(PrincipleConfig cfg, const StateSpace& space) {
    using K = PrincipleKind;
    const K k = cfg.kind;

    auto needs_baseline = [&]() {
        require(cfg.baseline.has_value(), to_string(k) + " requires a baseline measure");
        check_measure_dim(*cfg.baseline, space, "baseline measure");
    };
    auto needs_models = [&]() {
        require(!cfg.model_set.empty(), to_string(k) + " requires a nonempty model set");
        for (const auto& q : cfg.model_set) check_measure_dim(q, space, "model set member");
    };
    auto needs_theta = [&]() {
        require(cfg.theta >= 0.0, to_string(k) + " requires theta >= 0");
    };

    PremiumPrinciple h;
    h.space_ = space;

    PrincipleFlags f;
    switch (k) {
        case K::Fair:
            needs_baseline();
            f = {true, true, true, true};
            break;
        case K::Variance:
            needs_baseline();
            needs_theta();
            f.convex = true;
            f.sublinear = (cfg.theta == 0.0);
            f.monotone = (cfg.theta == 0.0);
            f.piecewise_linear = (cfg.theta == 0.0);
            break;
        case K::StdDev:
            needs_baseline();
            needs_theta();
            f.convex = true;
            f.sublinear = true;
            f.monotone = (cfg.theta == 0.0);
            f.piecewise_linear = (cfg.theta == 0.0);
            break;
        case K::MeanAbsDev:
            needs_baseline();
            needs_theta();
            f.convex = true;
            f.sublinear = true;
            f.monotone = (cfg.theta <= 0.5);
            f.piecewise_linear = true;
            break;
        case K::LpDeviation:
            needs_baseline();
            needs_theta();
            require(cfg.p >= 1.0, "LpDeviation requires p >= 1");
            f.convex = true;
            f.sublinear = true;
            f.monotone = (cfg.p == 1.0 && cfg.theta <= 0.5) || cfg.theta == 0.0;
            f.piecewise_linear = (cfg.p == 1.0 || cfg.theta == 0.0);
            break;
        case K::Economic: {
            needs_baseline();
            require(cfg.loss_fn.has_value(), "Economic requires a loss function");
            require(cfg.endowment.has_value(), "Economic requires an endowment claim");
            require(cfg.endowment->size() == space.n, "endowment does not match the state space");
            std::vector<double> density(space.n);
            double norm = 0.0;
            for (int i = 0; i < space.n; ++i) {
                density[i] = cfg.loss_fn->deriv((*cfg.endowment)[i]);
                require(density[i] >= 0.0, "economic loss function must be nondecreasing");
                norm += (*cfg.baseline)[i] * density[i];
            }
            require(norm > 1e-12, "economic density undefined: E_P[ell'(Z)] is zero");
            for (int i = 0; i < space.n; ++i) density[i] = (*cfg.baseline)[i] * density[i] / norm;
            h.economic_q_ = DiscreteMeasure::make(std::move(density));
            f = {true, true, true, true};
            break;
        }
        case K::RobustVariance:
            needs_models();
            needs_theta();
            f.convex = true;
            f.sublinear = (cfg.theta == 0.0);
            f.monotone = (cfg.theta == 0.0);
            f.piecewise_linear = (cfg.theta == 0.0);
            break;
        case K::MaxminExpectedLoss: {
            needs_models();
            require(cfg.loss_fn.has_value(), "MaxminExpectedLoss requires a loss function");
            bool lin = cfg.loss_fn->is_identity();
            f.convex = lin;
            f.sublinear = lin;
            f.monotone = lin;
            f.piecewise_linear = lin;
            break;
        }
        case K::SmoothAmbiguity: {
            needs_models();
            require(cfg.loss_fn.has_value(), "SmoothAmbiguity requires a loss function");
            require(cfg.ambiguity_fn.has_value(), "SmoothAmbiguity requires an ambiguity function");
            if (cfg.second_order_weights.empty())
                cfg.second_order_weights.assign(cfg.model_set.size(), 1.0 / cfg.model_set.size());
            require(cfg.second_order_weights.size() == cfg.model_set.size(),
                    "second-order weights must match the model set");
            DiscreteMeasure::make(cfg.second_order_weights);  // probability vector check
            bool lin = cfg.loss_fn->is_identity() && cfg.ambiguity_fn->is_identity();
            f.convex = lin;
            f.sublinear = lin;
            f.monotone = lin;
            f.piecewise_linear = lin;
            break;
        }
        case K::AmbiguityIndex:
            needs_baseline();
            needs_models();
            needs_theta();
            f.convex = true;
            f.sublinear = true;
            f.monotone = (cfg.model_set.size() == 1);
            f.piecewise_linear = true;
            break;
        case K::Quantile:
            needs_baseline();
            require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0, "Quantile requires epsilon in (0,1)");
            f.convex = false;
            f.sublinear = false;
            f.monotone = true;
            f.piecewise_linear = false;
            break;
        case K::AVaR:
            needs_baseline();
            require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0, "AVaR requires epsilon in (0,1)");
            f = {true, true, true, true};
            break;
        case K::AbsoluteDeviation:
            needs_baseline();
            needs_theta();
            f.convex = true;
            f.sublinear = true;
            f.monotone = (cfg.theta <= 1.0);
            f.piecewise_linear = true;
            break;
        case K::ChoquetDistortion: {
            needs_baseline();
            require(cfg.distortion.has_value(), "ChoquetDistortion requires a distortion");
            h.capacity_ = distort(*cfg.baseline, *cfg.distortion);
            bool concave = cfg.distortion->concave_on_grid();
            f.convex = concave;
            f.sublinear = concave;
            f.monotone = true;
            f.piecewise_linear = false;  // handled via the monotone closed form
            break;
        }
        case K::WorstCase:
            f = {true, true, true, true};
            break;
    }

    h.cfg_ = std::move(cfg);
    h.flags_ = f;
    return h;
}

double PremiumPrinciple::evaluate(const Claim& x) const {
    using K = PrincipleKind;
    if (x.size() != space_.n)
        throw ValidationError("claim does not match the principle's state space");
    const PrincipleConfig& c = cfg_;

    switch (c.kind) {
        case K::Fair:
            return dot(*c.baseline, x);
        case K::Variance: {
            auto m = moments(*c.baseline, x);
            return m.mean + 0.5 * c.theta * m.variance;
        }
        case K::StdDev: {
            auto m = moments(*c.baseline, x);
            return m.mean + c.theta * std::sqrt(m.variance);
        }
        case K::MeanAbsDev: {
            double mean = dot(*c.baseline, x);
            return mean + c.theta * mean_abs_about(*c.baseline, x, mean, 1.0);
        }
        case K::LpDeviation: {
            double mean = dot(*c.baseline, x);
            return mean + c.theta * std::pow(mean_abs_about(*c.baseline, x, mean, c.p), 1.0 / c.p);
        }
        case K::Economic:
            return dot(*economic_q_, x);
        case K::RobustVariance: {
            double worst_mean = -1e300, worst_var = 0.0;
            for (const auto& q : c.model_set) {
                auto m = moments(q, x);
                worst_mean = std::max(worst_mean, m.mean);
                worst_var = std::max(worst_var, m.variance);
            }
            return worst_mean + c.theta * worst_var;
        }
        case K::MaxminExpectedLoss: {
            double lo = x.inf();
            double worst = -1e300;
            for (const auto& q : c.model_set) {
                double e = 0.0;
                for (int i = 0; i < x.size(); ++i) e += q[i] * (*c.loss_fn)(x[i] - lo);
                worst = std::max(worst, e);
            }
            return worst + lo;
        }
        case K::SmoothAmbiguity: {
            double lo = x.inf();
            double acc = 0.0;
            for (std::size_t j = 0; j < c.model_set.size(); ++j) {
                double e = 0.0;
                for (int i = 0; i < x.size(); ++i)
                    e += c.model_set[j][i] * (*c.loss_fn)(x[i] - lo);
                acc += c.second_order_weights[j] * (*c.ambiguity_fn)(e);
            }
            return acc + lo;
        }
        case K::AmbiguityIndex:
            return dot(*c.baseline, x) + c.theta * ambiguity_index(c.model_set, x);
        case K::Quantile:
            return value_at_risk(*c.baseline, x, c.epsilon);
        case K::AVaR:
            return average_value_at_risk_loss(*c.baseline, x, c.epsilon);
        case K::AbsoluteDeviation: {
            double med = quantile(*c.baseline, x, 0.5);
            return dot(*c.baseline, x) + c.theta * mean_abs_about(*c.baseline, x, med, 1.0);
        }
        case K::ChoquetDistortion:
            return choquet_integral(*capacity_, x);
        case K::WorstCase:
            return x.sup();
    }
    throw ValidationError("unreachable principle kind");
}

} // namespace premia
