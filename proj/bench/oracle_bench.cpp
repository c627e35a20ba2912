#include <chrono>
#include <cstdio>

#include "premia/oracle.hpp"
#include "premia/principles.hpp"

using namespace premia;

// Compares the serial lattice kernel against the OpenMP one on identical
// grids and reports speedup. Both must land on the same (value, index).

namespace {

double run(const PremiumPrinciple& h, const Claim& x, bool parallel, double step,
           OracleResult& out) {
    OracleOptions opt;
    opt.parallel = parallel;
    opt.refine = false;
    opt.step = step;
    auto t0 = std::chrono::steady_clock::now();
    out = brute_r_max(h, x, opt);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main() {
    struct Case {
        const char* name;
        int n;
        double step;
    };
    const Case cases[] = {{"n=2 fine", 2, 0.002}, {"n=3 medium", 3, 0.02},
                          {"n=4 coarse", 4, 0.1}};

    std::printf("%-12s %12s %12s %9s  %s\n", "case", "serial[s]", "parallel[s]",
                "speedup", "match");
    for (const Case& c : cases) {
        StateSpace space = StateSpace::make(c.n);
        PrincipleConfig cfg;
        cfg.kind = PrincipleKind::Variance;
        cfg.baseline = DiscreteMeasure::uniform(c.n);
        cfg.theta = 2.0;
        PremiumPrinciple h = build_principle(cfg, space);

        std::vector<double> xs(c.n);
        for (int i = 0; i < c.n; ++i) xs[i] = (i % 2 == 0) ? -1.0 : 1.0;
        Claim x(xs);

        OracleResult rs, rp;
        double ts = run(h, x, false, c.step, rs);
        double tp = run(h, x, true, c.step, rp);
        bool match = rs.value == rp.value && rs.argmin == rp.argmin;
        std::printf("%-12s %12.3f %12.3f %8.2fx  %s\n", c.name, ts, tp,
                    ts / (tp > 0 ? tp : 1e-12), match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}
