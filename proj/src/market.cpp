#include "premia/market.hpp"

#include <algorithm>
#include <cmath>

#include "premia/decompose.hpp"
#include "premia/duality.hpp"
#include "premia/lp.hpp"

namespace premia {

MarketModel MarketModel::make(StateSpace space, std::vector<Claim> basis,
                              std::vector<double> prices, double tol) {
    if (basis.empty() || basis.size() != prices.size())
        throw ValidationError("market: basis and prices must be nonempty and equal-length");
    for (const auto& b : basis)
        if (b.size() != space.n)
            throw ValidationError("market: basis claim does not match the state space");
    for (double f : prices)
        if (!std::isfinite(f)) throw ValidationError("market: non-finite price");

    // must contain the constant claim 1 priced at 1
    bool has_unit = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        bool is_one = true;
        for (int i = 0; i < space.n; ++i)
            if (std::abs(basis[j][i] - 1.0) > 1e-12) is_one = false;
        if (is_one) {
            if (std::abs(prices[j] - 1.0) > tol)
                throw ValidationError("market: the unit claim must be priced at 1");
            has_unit = true;
        }
    }
    if (!has_unit)
        throw ValidationError("market: basis must include the constant claim 1");

    MarketModel m;
    m.space = std::move(space);
    m.basis = std::move(basis);
    m.prices = std::move(prices);

    // no-arbitrage: min F(X) over traded X with 0 <= X <= 1 must be >= -tol
    const int k = (int)m.basis.size();
    LpProblem lp(k);
    for (int j = 0; j < k; ++j) lp.c[j] = m.prices[j];
    for (int i = 0; i < m.space.n; ++i) {
        std::vector<double> row(k);
        for (int j = 0; j < k; ++j) row[j] = m.basis[j][i];
        lp.add_ge(row, 0.0);
        lp.add_le(std::move(row), 1.0);
    }
    LpSolution s = solve_lp(lp);
    if (s.status != LpStatus::Optimal || s.objective < -tol)
        throw ValidationError("market admits arbitrage: nonnegative traded claim with negative price");
    return m;
}

double MarketModel::price_of(const std::vector<double>& coeffs) const {
    if (coeffs.size() != prices.size())
        throw ValidationError("market: coefficient vector does not match the basis");
    double f = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) f += coeffs[j] * prices[j];
    return f;
}

Claim MarketModel::combine(const std::vector<double>& coeffs) const {
    if (coeffs.size() != basis.size())
        throw ValidationError("market: coefficient vector does not match the basis");
    Claim out = Claim::constant(space.n, 0.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (int i = 0; i < space.n; ++i) out[i] += coeffs[j] * basis[j][i];
    return out;
}

HedgeResult superhedge(const MarketModel& mkt, const Claim& x) {
    if (x.size() != mkt.space.n)
        throw ValidationError("superhedge: claim does not match the market's state space");
    const int k = (int)mkt.basis.size();
    // vars: m, c_1..c_k;  min m  s.t.  m + sum c_j (B_j - F(B_j)) >= X
    LpProblem lp(1 + k);
    lp.c[0] = 1.0;
    for (int i = 0; i < mkt.space.n; ++i) {
        std::vector<double> row(1 + k, 0.0);
        row[0] = 1.0;
        for (int j = 0; j < k; ++j) row[1 + j] = mkt.basis[j][i] - mkt.prices[j];
        lp.add_ge(std::move(row), x[i]);
    }
    LpSolution s = solve_lp(lp);
    if (s.status == LpStatus::Unbounded)
        throw NumericError("superhedging price unbounded: no martingale measure exists");
    if (s.status != LpStatus::Optimal)
        throw NumericError("superhedging LP failed");
    HedgeResult r;
    r.price = s.objective;
    r.portfolio.assign(s.x.begin() + 1, s.x.end());
    // the LP hedges in zero-cost units B_j - F(B_j); fold the residual cost
    // into the unit claim so the reported portfolio itself costs nothing
    double cost = mkt.price_of(r.portfolio);
    for (int j = 0; j < k; ++j)
        if (std::all_of(mkt.basis[j].values.begin(), mkt.basis[j].values.end(),
                        [](double v) { return v == 1.0; })) {
            r.portfolio[j] -= cost;
            break;
        }
    return r;
}

bool martingale_membership(const MarketModel& mkt, const DiscreteMeasure& q, double tol) {
    if (q.size() != mkt.space.n)
        throw ValidationError("martingale check: measure does not match the state space");
    for (std::size_t j = 0; j < mkt.basis.size(); ++j) {
        double e = 0.0;
        for (int i = 0; i < mkt.space.n; ++i) e += q[i] * mkt.basis[j][i];
        if (std::abs(e - mkt.prices[j]) > tol) return false;
    }
    return true;
}

std::vector<DiscreteMeasure> enumerate_martingale_measures(const MarketModel& mkt,
                                                           double tol) {
    // vertices of { q >= 0 : sum q = 1, E_q B_j = F(B_j) } via basic feasible
    // solutions: pick support columns, solve the equality system on them
    const int n = mkt.space.n;
    const int k = (int)mkt.basis.size();
    std::vector<std::vector<double>> eq;          // rows over q
    std::vector<double> rhs;
    eq.emplace_back(n, 1.0);
    rhs.push_back(1.0);
    for (int j = 0; j < k; ++j) {
        std::vector<double> row(n);
        for (int i = 0; i < n; ++i) row[i] = mkt.basis[j][i];
        eq.push_back(std::move(row));
        rhs.push_back(mkt.prices[j]);
    }
    const int m = (int)eq.size();

    std::vector<DiscreteMeasure> out;
    auto consider = [&](const std::vector<int>& support) {
        const int r = (int)support.size();
        // least-squares-free exact solve: use the first r independent rows
        std::vector<std::vector<double>> a(m, std::vector<double>(r + 1));
        for (int row = 0; row < m; ++row) {
            for (int c = 0; c < r; ++c) a[row][c] = eq[row][support[c]];
            a[row][r] = rhs[row];
        }
        // Gaussian elimination on an m x r system (m >= r typically)
        int rank = 0;
        for (int col = 0; col < r && rank < m; ++col) {
            int piv = -1;
            double bestabs = 1e-10;
            for (int row = rank; row < m; ++row)
                if (std::abs(a[row][col]) > bestabs) {
                    bestabs = std::abs(a[row][col]);
                    piv = row;
                }
            if (piv < 0) return;  // singular on this support
            std::swap(a[rank], a[piv]);
            for (int row = 0; row < m; ++row) {
                if (row == rank) continue;
                double f = a[row][col] / a[rank][col];
                if (f == 0.0) continue;
                for (int c2 = col; c2 <= r; ++c2) a[row][c2] -= f * a[rank][c2];
            }
            ++rank;
        }
        if (rank < r) return;
        for (int row = rank; row < m; ++row)
            if (std::abs(a[row][r]) > 1e-8) return;  // inconsistent
        std::vector<double> qv(n, 0.0);
        for (int c = 0; c < r; ++c) {
            double v = a[c][r] / a[c][c];
            if (v < -1e-9) return;
            qv[support[c]] = std::max(0.0, v);
        }
        double s = 0.0;
        for (double v : qv) s += v;
        if (std::abs(s - 1.0) > 1e-7) return;
        for (double& v : qv) v /= s;
        DiscreteMeasure cand = DiscreteMeasure::make(qv);
        if (!martingale_membership(mkt, cand, std::max(tol, 1e-7))) return;
        for (const auto& w : out) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d = std::max(d, std::abs(w[i] - cand[i]));
            if (d < 1e-8) return;
        }
        out.push_back(std::move(cand));
    };

    // supports of size up to m (rank of the equality system)
    std::vector<int> support;
    std::function<void(int)> rec = [&](int start) {
        if (!support.empty() && (int)support.size() <= m) consider(support);
        if ((int)support.size() == m) return;
        for (int i = start; i < n; ++i) {
            support.push_back(i);
            rec(i + 1);
            support.pop_back();
        }
    };
    rec(0);
    return out;
}

ConsistencyReport consistency_check(const PremiumPrinciple& h, const MarketModel& mkt,
                                    std::uint64_t seed, double tol) {
    ConsistencyReport rep;
    if (!h.flags().sublinear)
        throw ValidationError("consistency_check requires a sublinear principle");
    const int n = mkt.space.n;

    // precondition: H agrees with F on sampled traded claims
    {
        ClaimSampler s(n, seed);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        rep.precondition_ok = true;
        for (int t = 0; t < 100 && rep.precondition_ok; ++t) {
            std::vector<double> c(mkt.basis.size());
            for (double& v : c) v = coeff(s.rng());
            if (std::abs(h.evaluate(mkt.combine(c)) - mkt.price_of(c)) > tol) {
                rep.precondition_ok = false;
                rep.precondition_note = "H does not reproduce market prices on traded claims";
            }
        }
        if (!rep.precondition_ok) return rep;
    }

    ClaimSampler sampler(n, seed + 1);
    std::vector<Claim> pool = sampler.corner_cases();
    for (int t = 0; t < 50; ++t) pool.push_back(sampler.next());
    rep.claims_tested = (int)pool.size();

    // (i) R_Max == superhedging price on every sampled claim
    rep.rmax_equals_superhedge = true;
    for (const Claim& x : pool) {
        double r = decompose(h, x).r_max;
        double star = superhedge(mkt, x).price;
        if (std::abs(r - star) > tol) rep.rmax_equals_superhedge = false;
    }

    // (ii) for every claim, some traded claim dominates it at cost <= H(X):
    // feasibility LP  min F(sum c_j B_j)  s.t.  sum c_j B_j >= X
    rep.dominating_traded_claim = true;
    for (const Claim& x : pool) {
        const int k = (int)mkt.basis.size();
        LpProblem lp(k);
        for (int j = 0; j < k; ++j) lp.c[j] = mkt.prices[j];
        for (int i = 0; i < n; ++i) {
            std::vector<double> row(k);
            for (int j = 0; j < k; ++j) row[j] = mkt.basis[j][i];
            lp.add_ge(std::move(row), x[i]);
        }
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::Optimal || s.objective > h.evaluate(x) + tol)
            rep.dominating_traded_claim = false;
    }

    // (iii) plausible models == martingale measures: vertex-enumerated
    // martingale measures must be plausible, and plausible vertices must
    // price the market correctly
    rep.models_match_martingales = true;
    {
        ClaimSampler dirs(n, seed + 2);
        for (const auto& q : enumerate_martingale_measures(mkt))
            if (!plausible_membership(h, q, dirs, tol).member)
                rep.models_match_martingales = false;
        ModelSetDescription plausible = enumerate_plausible_set(h);
        if (plausible.exact) {
            for (const auto& q : plausible.members)
                if (!martingale_membership(mkt, q, tol))
                    rep.models_match_martingales = false;
        }
    }

    rep.agree = (rep.rmax_equals_superhedge == rep.dominating_traded_claim) &&
                (rep.dominating_traded_claim == rep.models_match_martingales);
    return rep;
}

} // namespace premia
