#pragma once

#include <stdexcept>
#include <string>

namespace premia {

// Bad inputs: shape mismatches, parameter ranges, malformed configs.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed inputs on which no finite answer exists (unbounded LP,
// non-coercive minimization).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace premia
