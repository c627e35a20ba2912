#include "premia/sampler.hpp"

namespace premia {

ClaimSampler::ClaimSampler(int n, std::uint64_t seed, double lo, double hi)
    : n_(n), lo_(lo), hi_(hi), rng_(seed), dist_(lo, hi) {
    if (n < 1) throw ValidationError("sampler needs n >= 1");
    if (!(lo < hi)) throw ValidationError("sampler needs lo < hi");
}

Claim ClaimSampler::next() {
    std::vector<double> v(n_);
    for (double& x : v) x = dist_(rng_);
    return Claim(std::move(v));
}

double ClaimSampler::next_shift() { return dist_(rng_); }

std::vector<Claim> ClaimSampler::corner_cases() const {
    std::vector<Claim> out;
    out.push_back(Claim::constant(n_, 0.0));
    out.push_back(Claim::constant(n_, 1.0));
    out.push_back(Claim::constant(n_, -1.0));
    for (int i = 0; i < n_; ++i) {
        std::vector<double> ind(n_, 0.0);
        ind[i] = 1.0;
        out.push_back(Claim(ind));
        for (double& x : ind) x = -x;
        out.push_back(Claim(ind));
    }
    return out;
}

Claim ClaimSampler::next_direction() {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> v(n_);
    double norm = 0.0;
    for (double& x : v) {
        x = unit(rng_);
        norm = std::max(norm, std::abs(x));
    }
    if (norm < 1e-12) { v[0] = 1.0; norm = 1.0; }
    for (double& x : v) x /= norm;
    return Claim(std::move(v));
}

} // namespace premia
