#include "premia/oracle.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace premia {

namespace {

std::vector<std::uint64_t> grid_sizes(const std::vector<double>& lo,
                                      const std::vector<double>& hi,
                                      double step) {
    std::vector<std::uint64_t> sizes(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (hi[i] < lo[i]) throw ValidationError("lattice: hi < lo");
        sizes[i] = (std::uint64_t)std::floor((hi[i] - lo[i]) / step + 1e-9) + 1;
    }
    return sizes;
}

std::uint64_t total_points(const std::vector<std::uint64_t>& sizes,
                           std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint64_t s : sizes) {
        if (s == 0) return 0;
        if (total > cap / s) throw ValidationError("lattice: point count exceeds cap");
        total *= s;
    }
    return total;
}

void decode(std::uint64_t idx, const std::vector<std::uint64_t>& sizes,
            const std::vector<double>& lo, double step, std::vector<double>& out) {
    for (std::size_t i = sizes.size(); i-- > 0;) {
        std::uint64_t k = idx % sizes[i];
        idx /= sizes[i];
        out[i] = lo[i] + step * (double)k;
    }
}

struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;

    // value first, then lexicographic index: deterministic across schedules
    bool better_than(const Best& o) const {
        if (value < o.value - 1e-15) return true;
        if (value > o.value + 1e-15) return false;
        return index < o.index;
    }
};

Best scan_serial(const std::function<double(const std::vector<double>&)>& f,
                 const std::vector<std::uint64_t>& sizes,
                 const std::vector<double>& lo, double step, std::uint64_t total) {
    Best best;
    std::vector<double> pt(lo.size());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode(idx, sizes, lo, step, pt);
        Best cand{f(pt), idx};
        if (cand.better_than(best)) best = cand;
    }
    return best;
}

Best scan_parallel(const std::function<double(const std::vector<double>&)>& f,
                   const std::vector<std::uint64_t>& sizes,
                   const std::vector<double>& lo, double step, std::uint64_t total) {
#ifdef _OPENMP
    Best best;
#pragma omp parallel
    {
        Best local;
        std::vector<double> pt(lo.size());
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < (std::int64_t)total; ++idx) {
            decode((std::uint64_t)idx, sizes, lo, step, pt);
            Best cand{f(pt), (std::uint64_t)idx};
            if (cand.better_than(local)) local = cand;
        }
#pragma omp critical
        {
            if (local.better_than(best)) best = local;
        }
    }
    return best;
#else
    return scan_serial(f, sizes, lo, step, total);
#endif
}

} // namespace

OracleResult lattice_minimize(const std::function<double(const std::vector<double>&)>& f,
                              const std::vector<double>& lo,
                              const std::vector<double>& hi,
                              const OracleOptions& opt) {
    if (lo.size() != hi.size() || lo.empty())
        throw ValidationError("lattice: bad bounds");
    auto sizes = grid_sizes(lo, hi, opt.step);
    std::uint64_t total = total_points(sizes, opt.max_points);

    Best best = opt.parallel ? scan_parallel(f, sizes, lo, opt.step, total)
                             : scan_serial(f, sizes, lo, opt.step, total);

    std::vector<double> arg(lo.size());
    decode(best.index, sizes, lo, opt.step, arg);
    double step_out = opt.step;
    std::uint64_t points = total;

    if (opt.refine) {
        // zoom: step/10 inside a +-5*step neighbourhood of the coarse optimum
        std::vector<double> rlo(lo.size()), rhi(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            rlo[i] = std::max(lo[i], arg[i] - 5.0 * opt.step);
            rhi[i] = std::min(hi[i], arg[i] + 5.0 * opt.step);
        }
        double fine = opt.step / 10.0;
        auto fsizes = grid_sizes(rlo, rhi, fine);
        std::uint64_t ftotal = total_points(fsizes, opt.max_points);
        Best fbest = opt.parallel ? scan_parallel(f, fsizes, rlo, fine, ftotal)
                                  : scan_serial(f, fsizes, rlo, fine, ftotal);
        if (fbest.value <= best.value + 1e-15) {
            decode(fbest.index, fsizes, rlo, fine, arg);
            best.value = std::min(best.value, fbest.value);
            step_out = fine;
        }
        points += ftotal;
    }

    OracleResult res;
    res.value = best.value;
    res.argmin = std::move(arg);
    res.points = points;
    res.error_bound = step_out * std::sqrt((double)lo.size());  // times L
    return res;
}

OracleResult brute_r_max(const PremiumPrinciple& h, const Claim& x,
                         const OracleOptions& opt) {
    const int n = x.size();
    // Y ranges over [x_i, x_i + span]: raising any coordinate far above the
    // rest can only help through cash shifts, which the span already covers.
    const double span = 2.0 * (x.sup() - x.inf()) + 1.0;
    std::vector<double> lo(x.values), hi(n);
    for (int i = 0; i < n; ++i) hi[i] = x[i] + span;

    auto f = [&h](const std::vector<double>& y) { return h.evaluate(Claim(y)); };
    return lattice_minimize(f, lo, hi, opt);
}

ConjugateScan brute_conjugate(const PremiumPrinciple& h, const DiscreteMeasure& q,
                              const OracleOptions& opt) {
    const int n = q.size();
    // sup E_Q[Y] - H(Y) over boxes [-r, r]^n; if the max keeps landing on the
    // boundary and growing, declare the conjugate infinite.
    ConjugateScan out;
    double prev = -std::numeric_limits<double>::infinity();
    int growth_streak = 0;
    for (double r : {1.0, 2.0, 4.0, 8.0}) {
        std::vector<double> lo(n, -r), hi(n, r);
        OracleOptions o = opt;
        o.step = std::max(opt.step, 2.0 * r / 40.0);  // keep the cap honest
        auto f = [&](const std::vector<double>& y) {
            Claim c{std::vector<double>(y)};
            double eq = 0.0;
            for (int i = 0; i < n; ++i) eq += q[i] * y[i];
            return -(eq - h.evaluate(c));
        };
        OracleResult res = lattice_minimize(f, lo, hi, o);
        double val = -res.value;
        out.value = val;
        out.argmax = res.argmin;
        out.error_bound = res.error_bound;
        if (val > 1e6) {
            out.finite = false;
            return out;
        }
        growth_streak = (val > prev + 1e-6) ? growth_streak + 1 : 0;
        prev = val;
    }
    if (growth_streak >= 2) out.finite = false;
    return out;
}

} // namespace premia
