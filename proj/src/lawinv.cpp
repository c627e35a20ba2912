#include "premia/lawinv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "premia/sampler.hpp"

namespace premia {

namespace {

// r_max through the engine when a method applies; nullopt for kinds the
// convex machinery refuses (checks then stay at the level of H itself)
std::optional<double> engine_r_max(const PremiumPrinciple& h, const Claim& x) {
    if (h.flags().monotone || h.flags().convex) return decompose(h, x).r_max;
    return std::nullopt;
}

std::vector<std::vector<int>> admissible_permutations(const DiscreteMeasure& p,
                                                      int trials,
                                                      std::uint64_t seed) {
    const int n = p.size();
    // group states into equal-probability blocks; admissible permutations
    // shuffle only within blocks (uniform P: one block, all permutations)
    std::vector<int> block(n);
    std::vector<double> levels;
    for (int i = 0; i < n; ++i) {
        int b = -1;
        for (std::size_t l = 0; l < levels.size(); ++l)
            if (std::abs(levels[l] - p[i]) < 1e-12) b = (int)l;
        if (b < 0) {
            levels.push_back(p[i]);
            b = (int)levels.size() - 1;
        }
        block[i] = b;
    }

    std::vector<std::vector<int>> perms;
    bool uniform_small = levels.size() == 1 && n <= 6;
    if (uniform_small) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        return perms;
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        // Fisher-Yates within each block
        for (std::size_t l = 0; l < levels.size(); ++l) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (block[i] == (int)l) idx.push_back(i);
            for (int i = (int)idx.size() - 1; i > 0; --i) {
                std::uniform_int_distribution<int> pick(0, i);
                std::swap(perm[idx[i]], perm[idx[pick(rng)]]);
            }
        }
        bool trivial = true;
        for (int i = 0; i < n; ++i)
            if (perm[i] != i) trivial = false;
        if (!trivial) perms.push_back(std::move(perm));
    }
    return perms;
}

Claim permute(const Claim& x, const std::vector<int>& perm) {
    Claim y = x;
    for (int i = 0; i < x.size(); ++i) y[i] = x[perm[i]];
    return y;
}

} // namespace

DominanceResult dominance_check(const PremiumPrinciple& h, const DiscreteMeasure& p,
                                int trials, std::uint64_t seed, double tol) {
    const int n = p.size();
    DominanceResult res;
    std::vector<int> null_states;
    for (int i = 0; i < n; ++i)
        if (p[i] <= 1e-15) null_states.push_back(i);
    if (null_states.empty()) {
        res.vacuous = true;
        return res;
    }

    ClaimSampler sampler(n, seed);
    std::uniform_real_distribution<double> bump(-2.0, 2.0);
    for (int t = 0; t < trials && res.dominated; ++t) {
        Claim x = sampler.next();
        Claim y = x;
        for (int i : null_states) y[i] = x[i] + bump(sampler.rng());
        if (std::abs(h.evaluate(x) - h.evaluate(y)) > tol) {
            res.dominated = false;
            res.witness_before = x;
            res.witness_after = y;
        } else if (res.dominated) {
            auto rx = engine_r_max(h, x);
            auto ry = engine_r_max(h, y);
            if (rx && ry && std::abs(*rx - *ry) > std::max(tol, 1e-6))
                res.r_max_inherits = false;
        }
    }
    return res;
}

LawInvarianceResult law_invariance_check(const PremiumPrinciple& h,
                                         const DiscreteMeasure& p, int trials,
                                         std::uint64_t seed, double tol) {
    const int n = p.size();
    LawInvarianceResult res;
    auto perms = admissible_permutations(p, trials, seed);
    bool nontrivial = false;
    for (const auto& perm : perms)
        for (int i = 0; i < n; ++i)
            if (perm[i] != i) nontrivial = true;
    if (!nontrivial) {
        res.vacuous = true;
        return res;
    }

    ClaimSampler sampler(n, seed + 1);
    std::vector<Claim> pool = sampler.corner_cases();
    for (int t = 0; t < trials; ++t) pool.push_back(sampler.next());

    for (const Claim& x : pool) {
        double hx = h.evaluate(x);
        for (const auto& perm : perms) {
            Claim y = permute(x, perm);
            if (std::abs(h.evaluate(y) - hx) > tol) {
                res.invariant = false;
                res.witness = x;
                res.witness_permutation = perm;
                return res;
            }
        }
    }

    // inheritance: R_Max under the same permutations (sampled subset)
    for (std::size_t k = 0; k < pool.size() && res.r_max_inherits; k += 7) {
        const Claim& x = pool[k];
        auto rx = engine_r_max(h, x);
        if (!rx) break;
        for (std::size_t pi = 0; pi < perms.size(); pi += std::max<std::size_t>(1, perms.size() / 8)) {
            auto ry = engine_r_max(h, permute(x, perms[pi]));
            if (ry && std::abs(*rx - *ry) > std::max(tol, 1e-6)) res.r_max_inherits = false;
        }
    }
    return res;
}

SafetyLoadingResult safety_loading_check(const PremiumPrinciple& h,
                                         const DiscreteMeasure& p, int trials,
                                         std::uint64_t seed, double tol) {
    SafetyLoadingResult res;
    if (!h.flags().convex) res.exploratory = true;

    ClaimSampler sampler(p.size(), seed);
    std::vector<Claim> pool = sampler.corner_cases();
    for (int t = 0; t < trials; ++t) pool.push_back(sampler.next());
    for (const Claim& x : pool) {
        if (h.evaluate(x) < dot(p, x) - tol) {
            res.holds = false;
            res.witness = x;
            return res;
        }
    }
    return res;
}

} // namespace premia
