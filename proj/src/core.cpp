#include "premia/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace premia {

// --- Distortion -----------------------------------------------------------

double Distortion::operator()(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (kind) {
        case DistortionKind::Identity: return u;
        case DistortionKind::Power: return std::pow(u, param);
        case DistortionKind::ProportionalHazard: return std::pow(u, 1.0 / param);
    }
    return u;
}

bool Distortion::concave_on_grid() const {
    // midpoint-concavity on a 1e-3 grid
    const double h = 1e-3;
    for (double u = h; u + h <= 1.0 + 1e-15; u += h) {
        double mid = (*this)(u);
        double avg = 0.5 * ((*this)(u - h) + (*this)(u + h));
        if (mid + 1e-12 < avg) return false;
    }
    return true;
}

Distortion Distortion::power(double a) { return validated(DistortionKind::Power, a); }

Distortion Distortion::proportional_hazard(double rho) {
    return validated(DistortionKind::ProportionalHazard, rho);
}

Distortion Distortion::validated(DistortionKind kind, double param) {
    if (!(param > 0.0)) throw ValidationError("distortion parameter must be positive");
    if (kind == DistortionKind::ProportionalHazard && param < 1.0)
        throw ValidationError("proportional hazard distortion needs rho >= 1");
    Distortion g{kind, param};
    if (std::abs(g(0.0)) > 1e-12 || std::abs(g(1.0) - 1.0) > 1e-12)
        throw ValidationError("distortion must satisfy g(0)=0 and g(1)=1");
    double prev = 0.0;
    for (double u = 0.0; u <= 1.0 + 1e-15; u += 1e-3) {
        double v = g(u);
        if (v + 1e-12 < prev) throw ValidationError("distortion must be nondecreasing");
        prev = v;
    }
    return g;
}

// --- Capacity -------------------------------------------------------------

Capacity Capacity::from_table(int n, std::vector<double> table) {
    if (n < 1 || n > 16)
        throw ValidationError("explicit capacities are supported only for 1 <= n <= 16");
    const std::size_t size = std::size_t{1} << n;
    if (table.size() != size)
        throw ValidationError("capacity table must have 2^n entries");
    if (std::abs(table[0]) > 1e-12 || std::abs(table[size - 1] - 1.0) > 1e-12)
        throw ValidationError("capacity must have gamma(empty)=0 and gamma(Omega)=1");
    // monotonicity: adding one state never decreases the value
    for (std::uint32_t a = 0; a < size; ++a)
        for (int i = 0; i < n; ++i) {
            std::uint32_t b = a | (1u << i);
            if (b != a && table[a] > table[b] + 1e-12)
                throw ValidationError("capacity violates monotonicity");
        }
    Capacity c;
    c.n_ = n;
    c.table_ = std::move(table);
    return c;
}

Capacity Capacity::distorted(DiscreteMeasure p, Distortion g) {
    Capacity c;
    c.n_ = p.size();
    c.p_ = std::move(p);
    c.g_ = g;
    c.lazy_ = true;
    return c;
}

Capacity Capacity::additive(DiscreteMeasure p) {
    return distorted(std::move(p), Distortion::identity());
}

double Capacity::at(std::uint32_t subset) const {
    if (lazy_) {
        double mass = 0.0;
        for (int i = 0; i < n_; ++i)
            if (subset & (1u << i)) mass += (*p_)[i];
        return g_(mass);
    }
    return table_[subset & ((std::uint32_t{1} << n_) - 1u)];
}

// --- moments / quantiles --------------------------------------------------

Moments moments(const DiscreteMeasure& p, const Claim& x) {
    require_same_space(p, x);
    double mean = dot(p, x);
    double var = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        double d = x[i] - mean;
        var += p[i] * d * d;
    }
    return {mean, std::max(var, 0.0)};
}

namespace {

// (value, probability) atoms sorted ascending with ties merged
std::vector<std::pair<double, double>> sorted_atoms(const DiscreteMeasure& p, const Claim& x) {
    require_same_space(p, x);
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(x.size());
    for (int i = 0; i < x.size(); ++i) atoms.emplace_back(x[i], p[i]);
    std::sort(atoms.begin(), atoms.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& a : atoms) {
        if (!merged.empty() && a.first <= merged.back().first + 1e-14)
            merged.back().second += a.second;
        else
            merged.push_back(a);
    }
    return merged;
}

} // namespace

double quantile(const DiscreteMeasure& p, const Claim& x, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw ValidationError("quantile level must lie in (0,1)");
    auto atoms = sorted_atoms(p, x);
    double cum = 0.0;
    for (const auto& [value, prob] : atoms) {
        cum += prob;
        if (cum >= lambda - 1e-12) return value;
    }
    return atoms.back().first;
}

double value_at_risk(const DiscreteMeasure& p, const Claim& x, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw ValidationError("value-at-risk level must lie in (0,1)");
    return quantile(p, x, 1.0 - eps);
}

double average_value_at_risk_loss(const DiscreteMeasure& p, const Claim& x, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw ValidationError("average value-at-risk level must lie in (0,1)");
    auto atoms = sorted_atoms(p, x);
    // mean of the upper eps-tail; the last atom taken enters fractionally
    double remaining = eps;
    double acc = 0.0;
    for (auto it = atoms.rbegin(); it != atoms.rend() && remaining > 1e-15; ++it) {
        double take = std::min(remaining, it->second);
        acc += take * it->first;
        remaining -= take;
    }
    return acc / eps;
}

double choquet_integral(const Capacity& gamma, const Claim& x) {
    if (gamma.states() != x.size())
        throw ValidationError("capacity and claim disagree on the state space");
    const int n = x.size();
    // distinct levels ascending, ties merged
    std::vector<double> levels(x.values);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end(),
                             [](double a, double b) { return std::abs(a - b) <= 1e-14; }),
                 levels.end());
    double acc = levels.front();
    for (std::size_t k = 1; k < levels.size(); ++k) {
        std::uint32_t above = 0;
        for (int i = 0; i < n; ++i)
            if (x[i] >= levels[k] - 1e-14) above |= (1u << i);
        acc += (levels[k] - levels[k - 1]) * gamma.at(above);
    }
    return acc;
}

Capacity distort(const DiscreteMeasure& p, const Distortion& g) {
    return Capacity::distorted(p, g);
}

} // namespace premia
