#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "premia/types.hpp"

namespace premia {

// Seeded claim generator: uniform entries in [lo, hi] plus deterministic
// corner cases (the zero claim, constants, indicators). Used by axiom and
// diagnostic checks; identical seeds give identical streams.
class ClaimSampler {
public:
    ClaimSampler(int n, std::uint64_t seed, double lo = -1.0, double hi = 1.0);

    Claim next();
    double next_shift();  // scalar in [lo, hi]
    std::vector<Claim> corner_cases() const;

    // uniform direction on the unit sup-norm ball
    Claim next_direction();

    int dimension() const { return n_; }
    std::mt19937_64& rng() { return rng_; }

private:
    int n_;
    double lo_, hi_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_;
};

} // namespace premia
