#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premia/core.hpp"
#include "premia/scalar_fn.hpp"
#include "premia/types.hpp"

namespace premia {

enum class PrincipleKind {
    Fair,
    Variance,
    StdDev,
    MeanAbsDev,
    LpDeviation,
    Economic,
    RobustVariance,
    MaxminExpectedLoss,
    SmoothAmbiguity,
    AmbiguityIndex,
    Quantile,
    AVaR,
    AbsoluteDeviation,
    ChoquetDistortion,
    WorstCase,
};

std::string to_string(PrincipleKind kind);
PrincipleKind principle_kind_from_string(const std::string& name);

// Everything a catalog member can need; build_principle checks that the
// fields required by `kind` are present and in range.
struct PrincipleConfig {
    PrincipleKind kind = PrincipleKind::Fair;
    std::optional<DiscreteMeasure> baseline;          // P
    std::vector<DiscreteMeasure> model_set;           // curly P
    double theta = 0.0;                               // loading
    double p = 2.0;                                   // L^p exponent
    double epsilon = 0.5;                             // quantile level
    std::optional<ScalarFn> loss_fn;                  // ell
    std::optional<ScalarFn> ambiguity_fn;             // phi
    std::optional<Claim> endowment;                   // Z
    std::vector<double> second_order_weights;         // mu over model_set
    std::optional<Distortion> distortion;             // g
};

// Structural flags declared from known theory at construction time. They
// are promises: a true flag must survive the sampling-based axiom checker.
struct PrincipleFlags {
    bool convex = false;
    bool sublinear = false;
    bool monotone = false;
    bool piecewise_linear = false;  // exact epigraph-LP formulation available
};

// Configured evaluator H. Immutable after construction; evaluate is pure.
class PremiumPrinciple {
public:
    double evaluate(const Claim& x) const;
    double operator()(const Claim& x) const { return evaluate(x); }

    const PrincipleConfig& config() const { return cfg_; }
    const StateSpace& space() const { return space_; }
    const PrincipleFlags& flags() const { return flags_; }
    PrincipleKind kind() const { return cfg_.kind; }

    // Economic kind: the measure with density ell'(Z)/E_P[ell'(Z)].
    const std::optional<DiscreteMeasure>& economic_measure() const { return economic_q_; }

    friend PremiumPrinciple build_principle(PrincipleConfig cfg, const StateSpace& space);

private:
    PremiumPrinciple() = default;
    PrincipleConfig cfg_;
    StateSpace space_;
    PrincipleFlags flags_;
    std::optional<DiscreteMeasure> economic_q_;
    std::optional<Capacity> capacity_;  // ChoquetDistortion: g∘P
};

PremiumPrinciple build_principle(PrincipleConfig cfg, const StateSpace& space);

// Half the spread of fair premia across a model set.
double ambiguity_index(const std::vector<DiscreteMeasure>& models, const Claim& x);

} // namespace premia
