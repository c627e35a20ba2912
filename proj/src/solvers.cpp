#include "premia/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace premia {

std::vector<double> project_simplex(std::vector<double> v) {
    // Sort-based projection (Held et al.): find the water level tau with
    // sum (v_i - tau)^+ = 1.
    const int n = (int)v.size();
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, tau = 0.0;
    int rho = 0;
    for (int i = 0; i < n; ++i) {
        cum += u[i];
        double t = (cum - 1.0) / (i + 1);
        if (u[i] - t > 0.0) {
            rho = i + 1;
            tau = t;
        }
    }
    (void)rho;
    for (double& x : v) x = std::max(0.0, x - tau);
    return v;
}

std::vector<double> project_box(std::vector<double> v,
                                const std::vector<double>& lo,
                                const std::vector<double>& hi) {
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = std::clamp(v[i], lo[i], hi[i]);
    return v;
}

std::vector<double> fd_gradient(const VecFn& f, const std::vector<double>& x,
                                double base) {
    double xmax = 0.0;
    for (double v : x) xmax = std::max(xmax, std::abs(v));
    const double h = base * (1.0 + xmax);
    std::vector<double> g(x.size());
    std::vector<double> xp = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xp[i] = x[i] + h;
        double fp = f(xp);
        xp[i] = x[i] - h;
        double fm = f(xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

namespace {

double inf_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double dot_v(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

using ProjFn = std::function<std::vector<double>(std::vector<double>)>;

DescentResult projected_descent(const VecFn& f, std::vector<double> x,
                                const ProjFn& project,
                                const DescentOptions& opt) {
    x = project(std::move(x));
    double fx = f(x);
    std::vector<double> g = fd_gradient(f, x, opt.fd_step);
    double step = opt.init_step;

    DescentResult res;
    std::vector<double> xprev, gprev;
    int it = 0;
    for (; it < opt.max_iter; ++it) {
        // trial point with Armijo backtracking on the projected step
        std::vector<double> xn;
        double fn = 0.0;
        double s = step;
        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
            std::vector<double> cand(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) cand[i] = x[i] - s * g[i];
            cand = project(std::move(cand));
            double fc = f(cand);
            double decrease = dot_v(g, x) - dot_v(g, cand);  // g.(x - cand)
            if (fc <= fx - 1e-4 * decrease + 1e-15) {
                xn = std::move(cand);
                fn = fc;
                accepted = true;
                break;
            }
            s *= 0.5;
        }
        if (!accepted) break;  // no descent direction at numeric precision

        if (inf_norm_diff(xn, x) < opt.tol) {
            x = std::move(xn);
            fx = fn;
            res.converged = true;
            ++it;
            break;
        }

        xprev = std::move(x);
        gprev = std::move(g);
        x = std::move(xn);
        fx = fn;
        g = fd_gradient(f, x, opt.fd_step);

        // Barzilai-Borwein step for the next iteration
        std::vector<double> dx(x.size()), dg(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            dx[i] = x[i] - xprev[i];
            dg[i] = g[i] - gprev[i];
        }
        double num = dot_v(dx, dx), den = dot_v(dx, dg);
        step = (den > 1e-14) ? std::clamp(num / den, 1e-8, 1e6) : opt.init_step;
    }

    // Diminishing-step pass: rescues nonsmooth objectives where Armijo
    // stalls on a kink.
    if (opt.nonsmooth_fallback) {
        double radius = 0.0;
        for (double v : x) radius = std::max(radius, std::abs(v));
        double c = 0.5 * (1.0 + radius);
        std::vector<double> best = x;
        double fbest = fx;
        std::vector<double> cur = x;
        for (int k = 1; k <= 20000; ++k) {
            std::vector<double> gk = fd_gradient(f, cur, opt.fd_step);
            double gn = std::sqrt(std::max(dot_v(gk, gk), 1e-18));
            double s = c / (std::sqrt((double)k) * gn);
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= s * gk[i];
            cur = project(std::move(cur));
            double fc = f(cur);
            if (fc < fbest) {
                fbest = fc;
                best = cur;
            }
        }
        if (fbest < fx - 1e-14) {
            x = best;
            fx = fbest;
        }
    }

    res.x = std::move(x);
    res.value = fx;
    res.iterations = it;
    return res;
}

} // namespace

DescentResult minimize_box(const VecFn& f, std::vector<double> x0,
                           const std::vector<double>& lo,
                           const std::vector<double>& hi,
                           const DescentOptions& opt) {
    if (x0.size() != lo.size() || x0.size() != hi.size())
        throw ValidationError("minimize_box: size mismatch");
    auto proj = [&lo, &hi](std::vector<double> v) {
        return project_box(std::move(v), lo, hi);
    };
    return projected_descent(f, std::move(x0), proj, opt);
}

DescentResult maximize_simplex(const VecFn& f, std::vector<double> x0,
                               const DescentOptions& opt) {
    auto neg = [&f](const std::vector<double>& v) { return -f(v); };
    auto proj = [](std::vector<double> v) { return project_simplex(std::move(v)); };
    DescentResult r = projected_descent(neg, std::move(x0), proj, opt);
    r.value = -r.value;
    return r;
}

} // namespace premia
