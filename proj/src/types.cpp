#include "premia/types.hpp"

#include <numeric>
#include <set>

namespace premia {

StateSpace StateSpace::make(int n, std::vector<std::string> labels) {
    if (n < 1) throw ValidationError("state space needs n >= 1, got " + std::to_string(n));
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw ValidationError("label count does not match n");
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (static_cast<int>(distinct.size()) != n)
            throw ValidationError("state labels must be distinct");
    }
    return StateSpace{n, std::move(labels)};
}

Claim Claim::operator+(double m) const {
    Claim out = *this;
    for (double& v : out.values) v += m;
    return out;
}

Claim Claim::operator-() const {
    Claim out = *this;
    for (double& v : out.values) v = -v;
    return out;
}

Claim Claim::validated(std::vector<double> v, const StateSpace& space) {
    if (static_cast<int>(v.size()) != space.n)
        throw ValidationError("claim length does not match state space");
    for (double x : v)
        if (!std::isfinite(x)) throw ValidationError("claim entries must be finite");
    return Claim(std::move(v));
}

DiscreteMeasure DiscreteMeasure::make(std::vector<double> w) {
    if (w.empty()) throw ValidationError("measure needs at least one state");
    double total = 0.0;
    for (double p : w) {
        if (!std::isfinite(p) || p < 0.0)
            throw ValidationError("measure weights must be finite and nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ValidationError("measure weights must sum to 1 (got " + std::to_string(total) + ")");
    return DiscreteMeasure{std::move(w)};
}

DiscreteMeasure DiscreteMeasure::uniform(int n) {
    if (n < 1) throw ValidationError("uniform measure needs n >= 1");
    return DiscreteMeasure{std::vector<double>(n, 1.0 / n)};
}

double dot(const DiscreteMeasure& p, const Claim& x) {
    require_same_space(p, x);
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) s += p[i] * x[i];
    return s;
}

} // namespace premia
