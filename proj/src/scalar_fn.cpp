#include "premia/scalar_fn.hpp"

#include <cmath>

namespace premia {

double ScalarFn::operator()(double x) const {
    switch (kind) {
        case ScalarFnKind::Identity: return x;
        case ScalarFnKind::Power: {
            double mag = std::pow(std::abs(x), a);
            return b * (x < 0 ? -mag : mag);
        }
        case ScalarFnKind::Exponential: return (std::exp(a * x) - 1.0) / a;
        case ScalarFnKind::PiecewiseLinear: return x < 0 ? a * x : b * x;
    }
    return x;
}

double ScalarFn::deriv(double x) const {
    switch (kind) {
        case ScalarFnKind::Identity: return 1.0;
        case ScalarFnKind::Power: return b * a * std::pow(std::abs(x), a - 1.0);
        case ScalarFnKind::Exponential: return std::exp(a * x);
        case ScalarFnKind::PiecewiseLinear: return x < 0 ? a : b;
    }
    return 1.0;
}

ScalarFn ScalarFn::power(double exponent, double scale) {
    if (!(exponent > 0.0)) throw ValidationError("power function needs exponent > 0");
    if (!(scale >= 0.0)) throw ValidationError("power function needs scale >= 0");
    return {ScalarFnKind::Power, exponent, scale};
}

ScalarFn ScalarFn::exponential(double rate) {
    if (!(rate > 0.0)) throw ValidationError("exponential function needs rate > 0");
    return {ScalarFnKind::Exponential, rate, 0.0};
}

ScalarFn ScalarFn::piecewise_linear(double slope_neg, double slope_pos) {
    if (slope_neg < 0.0 || slope_pos < 0.0)
        throw ValidationError("piecewise-linear slopes must be nonnegative");
    return {ScalarFnKind::PiecewiseLinear, slope_neg, slope_pos};
}

} // namespace premia
