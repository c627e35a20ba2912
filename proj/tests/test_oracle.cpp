#include <doctest.h>

#include <cmath>

#include "premia/oracle.hpp"

using namespace premia;

namespace {

PremiumPrinciple variance_principle(int n, double theta) {
    PrincipleConfig cfg;
    cfg.kind = PrincipleKind::Variance;
    cfg.baseline = DiscreteMeasure::uniform(n);
    cfg.theta = theta;
    return build_principle(std::move(cfg), StateSpace::make(n));
}

} // namespace

TEST_CASE("lattice minimize: quadratic bowl, serial vs parallel identical") {
    auto f = [](const std::vector<double>& v) {
        return (v[0] - 0.3) * (v[0] - 0.3) + (v[1] + 0.4) * (v[1] + 0.4);
    };
    OracleOptions opt;
    opt.step = 0.01;
    opt.refine = false;
    opt.parallel = false;
    OracleResult serial = lattice_minimize(f, {-1.0, -1.0}, {1.0, 1.0}, opt);
    opt.parallel = true;
    OracleResult parallel = lattice_minimize(f, {-1.0, -1.0}, {1.0, 1.0}, opt);
    CHECK(serial.value == parallel.value);
    CHECK(serial.argmin == parallel.argmin);
    CHECK(serial.points == parallel.points);
    CHECK(std::abs(serial.argmin[0] - 0.3) <= opt.step + 1e-12);
    CHECK(std::abs(serial.argmin[1] + 0.4) <= opt.step + 1e-12);
}

TEST_CASE("lattice minimize: deterministic tie-break on a flat objective") {
    auto f = [](const std::vector<double>&) { return 7.0; };
    OracleOptions opt;
    opt.step = 0.25;
    opt.refine = false;
    for (bool par : {false, true}) {
        opt.parallel = par;
        OracleResult r = lattice_minimize(f, {0.0, 0.0}, {1.0, 1.0}, opt);
        CHECK(r.value == 7.0);
        CHECK(r.argmin == std::vector<double>{0.0, 0.0});  // lowest lexicographic index
    }
}

TEST_CASE("lattice minimize: refinement tightens the grid") {
    auto f = [](const std::vector<double>& v) { return std::abs(v[0] - 0.123456); };
    OracleOptions opt;
    opt.step = 0.01;
    opt.refine = true;
    OracleResult r = lattice_minimize(f, {0.0}, {1.0}, opt);
    CHECK(r.value <= 0.001);
}

TEST_CASE("lattice minimize: point-count guard") {
    auto f = [](const std::vector<double>& v) { return v[0]; };
    OracleOptions opt;
    opt.step = 1e-7;
    opt.max_points = 1000;
    CHECK_THROWS_AS(lattice_minimize(f, {0.0, 0.0}, {1.0, 1.0}, opt), ValidationError);
}

TEST_CASE("brute-force monotone envelope agrees with hand values") {
    // variance loading, theta = 2, X = (0, 1): best dominating claim is X itself
    auto h = variance_principle(2, 2.0);
    OracleResult r = brute_r_max(h, Claim{0.0, 1.0});
    CHECK(r.value == doctest::Approx(0.75).epsilon(1e-3));

    // X = (-2, 2): optimum flattens the low state up to 1, value 1.75
    OracleResult r2 = brute_r_max(h, Claim{-2.0, 2.0});
    CHECK(r2.value == doctest::Approx(1.75).epsilon(1e-3));
    CHECK(r2.argmin[0] == doctest::Approx(1.0).epsilon(0.05));
    CHECK(r2.argmin[1] == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("brute-force conjugate: finite and infinite cases") {
    auto h = variance_principle(2, 2.0);
    // Gini-style penalty: (1 / (2 theta)) * var_P(dQ/dP) = 0.0625 at Q=(1/4,3/4)
    ConjugateScan fin = brute_conjugate(h, DiscreteMeasure::make({0.25, 0.75}),
                                        OracleOptions{.step = 0.02});
    CHECK(fin.finite);
    CHECK(fin.value == doctest::Approx(0.0625).epsilon(0.05));

    // worst-case principle: any Q in the simplex has zero penalty
    PrincipleConfig wc;
    wc.kind = PrincipleKind::WorstCase;
    wc.baseline = DiscreteMeasure::uniform(2);
    auto hw = build_principle(std::move(wc), StateSpace::make(2));
    ConjugateScan z = brute_conjugate(hw, DiscreteMeasure::make({0.3, 0.7}),
                                      OracleOptions{.step = 0.05});
    CHECK(z.finite);
    CHECK(z.value == doctest::Approx(0.0).epsilon(1e-6));

    // fair principle at Q != P: slope grows without bound
    PrincipleConfig fr;
    fr.kind = PrincipleKind::Fair;
    fr.baseline = DiscreteMeasure::uniform(2);
    auto hf = build_principle(std::move(fr), StateSpace::make(2));
    ConjugateScan inf = brute_conjugate(hf, DiscreteMeasure::make({0.3, 0.7}),
                                        OracleOptions{.step = 0.05});
    CHECK_FALSE(inf.finite);
}
