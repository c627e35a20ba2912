#pragma once

#include <string>

#include "premia/errors.hpp"

namespace premia {

enum class ScalarFnKind { Identity, Power, Exponential, PiecewiseLinear };

// Named nondecreasing scalar function with a derivative, used for loss
// functions (ell) and ambiguity aversion (phi). Restricted to a parametric
// family so principle configs stay serializable.
//   Identity:        f(x) = x
//   Power:           f(x) = scale * sign(x) * |x|^a,  a > 0, scale >= 0
//   Exponential:     f(x) = (exp(rate*x) - 1) / rate, rate > 0
//   PiecewiseLinear: f(x) = slope_neg*x (x<0), slope_pos*x (x>=0), slopes >= 0
// All members are normalized to f(0) = 0.
struct ScalarFn {
    ScalarFnKind kind = ScalarFnKind::Identity;
    double a = 1.0;     // Power exponent / Exponential rate / PiecewiseLinear slope_neg
    double b = 1.0;     // Power scale / PiecewiseLinear slope_pos

    double operator()(double x) const;
    double deriv(double x) const;
    bool is_identity() const { return kind == ScalarFnKind::Identity; }

    static ScalarFn identity() { return {}; }
    static ScalarFn power(double exponent, double scale = 1.0);
    static ScalarFn exponential(double rate);
    static ScalarFn piecewise_linear(double slope_neg, double slope_pos);
};

} // namespace premia
