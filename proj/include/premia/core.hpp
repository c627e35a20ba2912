#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "premia/types.hpp"

namespace premia {

// --- distortion functions -------------------------------------------------

enum class DistortionKind { Identity, Power, ProportionalHazard };

// Nondecreasing g on [0,1] with g(0)=0, g(1)=1, from a named parametric
// family so configs stay serializable.
//   Power:              g(u) = u^a,        a > 0
//   ProportionalHazard: g(u) = u^(1/rho),  rho >= 1 (concave)
struct Distortion {
    DistortionKind kind = DistortionKind::Identity;
    double param = 1.0;

    double operator()(double u) const;
    bool concave_on_grid() const;

    static Distortion identity() { return {DistortionKind::Identity, 1.0}; }
    static Distortion power(double a);
    static Distortion proportional_hazard(double rho);
    static Distortion validated(DistortionKind kind, double param);
};

// --- capacities -----------------------------------------------------------

// Monotone set function with gamma(empty)=0, gamma(Omega)=1. Stored as an
// explicit bitmask table for n <= 16; distorted probabilities g∘P are kept
// lazy so any n works.
class Capacity {
public:
    static Capacity from_table(int n, std::vector<double> table);
    static Capacity distorted(DiscreteMeasure p, Distortion g);
    static Capacity additive(DiscreteMeasure p);

    double at(std::uint32_t subset) const;
    int states() const { return n_; }

private:
    Capacity() = default;
    int n_ = 0;
    std::vector<double> table_;       // size 1<<n when explicit
    std::optional<DiscreteMeasure> p_; // lazy g∘P form
    Distortion g_;
    bool lazy_ = false;
};

// --- moments, quantiles, tail means ---------------------------------------

struct Moments {
    double mean;
    double variance;
};

Moments moments(const DiscreteMeasure& p, const Claim& x);

// Left-continuous inverse inf{a : P(X<=a) >= lambda}.
double quantile(const DiscreteMeasure& p, const Claim& x, double lambda);

// Premium-side V@R: quantile at level 1-eps.
double value_at_risk(const DiscreteMeasure& p, const Claim& x, double eps);

// Loss-side AV@R: probability-weighted mean of the upper eps-tail of X,
// computed exactly by sorting (the quantile function is a step function).
double average_value_at_risk_loss(const DiscreteMeasure& p, const Claim& x, double eps);

// Layer-cake sum over the jump levels of X.
double choquet_integral(const Capacity& gamma, const Claim& x);

Capacity distort(const DiscreteMeasure& p, const Distortion& g);

} // namespace premia
