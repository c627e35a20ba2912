#include <doctest.h>

#include <cmath>

#include "premia/lp.hpp"
#include "premia/solvers.hpp"

using namespace premia;

TEST_CASE("simplex: basic bounded problem") {
    // min -x - 2y  s.t. x + y <= 4, x <= 3, y <= 2, x,y >= 0
    LpProblem p(2);
    p.c = {-1.0, -2.0};
    p.lower = {0.0, 0.0};
    p.upper = {3.0, 2.0};
    p.add_le({1.0, 1.0}, 4.0);
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(-6.0));
    CHECK(s.x[0] == doctest::Approx(2.0));
    CHECK(s.x[1] == doctest::Approx(2.0));
}

TEST_CASE("simplex: free variables and equality rows") {
    // min x + y  s.t. x - y == 3, x + y >= 1, both free
    LpProblem p(2);
    p.c = {1.0, 1.0};
    p.add_eq({1.0, -1.0}, 3.0);
    p.add_ge({1.0, 1.0}, 1.0);
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(1.0));
    CHECK(s.x[0] - s.x[1] == doctest::Approx(3.0));
}

TEST_CASE("simplex: infeasible and unbounded detection") {
    LpProblem inf(1);
    inf.lower = {0.0};
    inf.add_le({1.0}, -1.0);
    CHECK(solve_lp(inf).status == LpStatus::Infeasible);

    LpProblem unb(1);
    unb.c = {-1.0};
    unb.lower = {0.0};
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("simplex: degenerate rows terminate (Bland)") {
    // redundant equalities around a single vertex
    LpProblem p(2);
    p.c = {1.0, 1.0};
    p.lower = {0.0, 0.0};
    p.add_eq({1.0, 1.0}, 1.0);
    p.add_eq({2.0, 2.0}, 2.0);
    p.add_ge({1.0, 0.0}, 0.0);
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(1.0));
}

TEST_CASE("simplex: probability-simplex LP recovers a vertex") {
    // max q . x over the simplex cut by q_1 <= 0.5; x = (1, 2, 3) puts all
    // mass on state 3 and the cut never binds.
    LpProblem p(3);
    p.c = {-1.0, -2.0, -3.0};  // maximize via negation
    p.lower = {0.0, 0.0, 0.0};
    p.add_eq({1.0, 1.0, 1.0}, 1.0);
    p.add_le({1.0, 0.0, 0.0}, 0.5);
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(-s.objective == doctest::Approx(3.0));
    CHECK(s.x[2] == doctest::Approx(1.0));
}

TEST_CASE("simplex projection") {
    auto w = project_simplex({0.2, 0.4, 0.4});
    CHECK(w[0] == doctest::Approx(0.2));
    w = project_simplex({2.0, 0.0, 0.0});
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == doctest::Approx(0.0));
    w = project_simplex({0.5, 0.5, -5.0});
    CHECK(w[0] == doctest::Approx(0.5));
    CHECK(w[2] == doctest::Approx(0.0));
    double sum = 0.0;
    for (double v : project_simplex({-3.0, 1.7, 0.2, 9.0})) {
        CHECK(v >= 0.0);
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("finite-difference gradient on a quadratic") {
    VecFn f = [](const std::vector<double>& v) {
        return v[0] * v[0] + 3.0 * v[0] * v[1];
    };
    auto g = fd_gradient(f, {1.0, 2.0});
    CHECK(g[0] == doctest::Approx(8.0).epsilon(1e-5));
    CHECK(g[1] == doctest::Approx(3.0).epsilon(1e-5));
}

TEST_CASE("projected descent: smooth quadratic in a box") {
    VecFn f = [](const std::vector<double>& v) {
        return (v[0] - 3.0) * (v[0] - 3.0) + 2.0 * (v[1] + 1.0) * (v[1] + 1.0);
    };
    DescentResult r = minimize_box(f, {0.0, 0.0}, {-2.0, -2.0}, {2.0, 2.0});
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));  // x0 sticks at the bound 2
    CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(r.x[1] == doctest::Approx(-1.0).epsilon(1e-5));
}

TEST_CASE("projected descent: nonsmooth objective via fallback") {
    VecFn f = [](const std::vector<double>& v) {
        return std::abs(v[0] - 0.7) + std::abs(v[1] + 0.3);
    };
    DescentResult r = minimize_box(f, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, 1.0});
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-4));
}

TEST_CASE("projected ascent on the simplex") {
    // maximize q . x - var-style penalty; plain linear objective hits a vertex
    VecFn f = [](const std::vector<double>& q) { return q[0] + 3.0 * q[1] + 2.0 * q[2]; };
    DescentResult r = maximize_simplex(f, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-6));
}
