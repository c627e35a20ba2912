#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "premia/errors.hpp"

namespace premia {

inline constexpr double kDefaultTol = 1e-9;

// Finite state space omega_1..omega_n. Labels are optional display names.
struct StateSpace {
    int n = 0;
    std::vector<std::string> labels;

    static StateSpace make(int n, std::vector<std::string> labels = {});
};

// Payoff vector over a state space; positive entries are losses.
struct Claim {
    std::vector<double> values;

    Claim() = default;
    explicit Claim(std::vector<double> v) : values(std::move(v)) {}
    Claim(std::initializer_list<double> v) : values(v) {}

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int i) const { return values[i]; }
    double& operator[](int i) { return values[i]; }

    double sup() const { return *std::max_element(values.begin(), values.end()); }
    double inf() const { return *std::min_element(values.begin(), values.end()); }

    Claim operator+(double m) const;
    Claim operator-(double m) const { return *this + (-m); }
    Claim operator-() const;

    static Claim constant(int n, double m) { return Claim(std::vector<double>(n, m)); }
    static Claim validated(std::vector<double> v, const StateSpace& space);
};

// Probability vector on the state space. Doubles as plausible model and
// martingale measure.
struct DiscreteMeasure {
    std::vector<double> weights;

    int size() const { return static_cast<int>(weights.size()); }
    double operator[](int i) const { return weights[i]; }

    static DiscreteMeasure make(std::vector<double> w);
    static DiscreteMeasure uniform(int n);
};

inline void require_same_space(const DiscreteMeasure& p, const Claim& x) {
    if (p.size() != x.size())
        throw ValidationError("dimension mismatch: measure has " +
                              std::to_string(p.size()) + " states, claim has " +
                              std::to_string(x.size()));
}

double dot(const DiscreteMeasure& p, const Claim& x);

} // namespace premia
