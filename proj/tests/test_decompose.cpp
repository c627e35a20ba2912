#include <doctest.h>

#include "premia/decompose.hpp"

using namespace premia;

namespace {

PremiumPrinciple make(PrincipleKind kind, int n,
                      const std::function<void(PrincipleConfig&)>& fill = nullptr) {
    PrincipleConfig cfg;
    cfg.kind = kind;
    cfg.baseline = DiscreteMeasure::uniform(n);
    if (fill) fill(cfg);
    return build_principle(std::move(cfg), StateSpace::make(n));
}

MarketModel constants_market(int n) {
    return MarketModel::make(StateSpace::make(n), {Claim::constant(n, 1.0)}, {1.0});
}

} // namespace

TEST_CASE("monotone members decompose trivially") {
    Claim x{0.0, 1.0, 2.0, 3.0};
    for (auto kind : {PrincipleKind::Fair, PrincipleKind::WorstCase, PrincipleKind::AVaR}) {
        auto h = make(kind, 4, [](auto& c) { c.epsilon = 0.5; });
        Decomposition d = decompose(h, x);
        CHECK(d.method == SolveMethod::ClosedForm);
        CHECK(d.r_max == doctest::Approx(h(x)));
        CHECK(d.d_min == doctest::Approx(0.0));
    }
}

TEST_CASE("variance loading: closed form, descent, and hand values agree") {
    auto h = make(PrincipleKind::Variance, 2, [](auto& c) { c.theta = 2.0; });

    Claim x{0.0, 1.0};
    Decomposition d = decompose(h, x);
    CHECK(d.premium == doctest::Approx(0.75));
    CHECK(d.r_max == doctest::Approx(0.75));   // X is its own monotone envelope here
    CHECK(d.d_min == doctest::Approx(0.0).epsilon(1e-7));

    Claim y{-2.0, 2.0};
    Decomposition dy = decompose(h, y);
    CHECK(dy.premium == doctest::Approx(4.0));
    CHECK(dy.r_max == doctest::Approx(1.75));  // optimum lifts the low state to 1
    CHECK(dy.d_min == doctest::Approx(2.25));
    CHECK(dy.optimizer.values.size() == 2);

    auto [prim, opt] = r_max_primal(h, y);
    CHECK(prim == doctest::Approx(1.75).epsilon(1e-5));
    CHECK(opt[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(opt[1] == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(r_max_closed_form(h, y).has_value());
    CHECK(*r_max_closed_form(h, y) == doctest::Approx(1.75));
}

TEST_CASE("absolute deviation: envelope is the upper tail mean") {
    Claim x{0.0, 1.0, 2.0, 3.0};
    auto h1 = make(PrincipleKind::AbsoluteDeviation, 4, [](auto& c) { c.theta = 1.0; });
    Decomposition d1 = decompose(h1, x);
    CHECK(d1.premium == doctest::Approx(2.5));
    CHECK(d1.r_max == doctest::Approx(2.5));   // tail mean at level 1/2
    CHECK(d1.d_min == doctest::Approx(0.0).epsilon(1e-7));

    auto h2 = make(PrincipleKind::AbsoluteDeviation, 4, [](auto& c) { c.theta = 2.0; });
    Decomposition d2 = decompose(h2, x);
    CHECK(d2.premium == doctest::Approx(3.5));
    CHECK(d2.r_max == doctest::Approx(2.75));  // tail mean at level 1/3
    CHECK(d2.d_min == doctest::Approx(0.75));
}

TEST_CASE("piecewise-linear members use the epigraph LP and match descent") {
    // theta above 1/2 so the member is genuinely non-monotone
    auto h = make(PrincipleKind::MeanAbsDev, 3, [](auto& c) { c.theta = 0.8; });
    Claim x{-1.0, 0.0, 2.0};
    Decomposition d = decompose(h, x);
    CHECK(d.method == SolveMethod::DualLP);
    SolveConfig cfg;
    auto [prim, opt] = r_max_primal(h, x, cfg);
    CHECK(d.r_max == doctest::Approx(prim).epsilon(1e-5));
    CHECK(d.d_min >= -1e-9);
    CHECK(d.premium == doctest::Approx(h(x)));
}

TEST_CASE("smooth convex members run projected descent") {
    auto h = make(PrincipleKind::StdDev, 3, [](auto& c) { c.theta = 0.5; });
    Claim x{-1.0, 0.5, 1.0};
    Decomposition d = decompose(h, x);
    CHECK(d.r_max <= h(x) + 1e-9);
    CHECK(d.r_max >= x.inf());
    CHECK(d.d_min >= -1e-9);
    // the optimizer dominates x
    for (int i = 0; i < x.size(); ++i) CHECK(d.optimizer[i] >= x[i] - 1e-6);
    CHECK(h(d.optimizer) == doctest::Approx(d.r_max).epsilon(1e-5));
}

TEST_CASE("nonconvex non-monotone members are refused") {
    auto h = make(PrincipleKind::StdDev, 2, [](auto& c) { c.theta = 0.5; });
    CHECK_NOTHROW(r_max_primal(h, Claim{0.0, 1.0}));
    // quantile is monotone, so decompose works, but the primal solver
    // refuses it for lack of convexity
    auto q = make(PrincipleKind::Quantile, 2, [](auto& c) { c.epsilon = 0.5; });
    CHECK_THROWS_AS(r_max_primal(q, Claim{0.0, 1.0}), ValidationError);
    CHECK(decompose(q, Claim{0.0, 1.0}).method == SolveMethod::ClosedForm);
}

TEST_CASE("generalized envelope over a traded cash space") {
    auto fair = make(PrincipleKind::Fair, 3);
    MarketModel m = constants_market(3);
    Claim x{0.0, 1.0, 2.0};

    double pw = r_max_generalized(fair, x, m, ClaimOrder::Pointwise);
    CHECK(pw == doctest::Approx(decompose(fair, x).r_max).epsilon(1e-6));

    // increasing-convex order: for a fair principle the envelope collapses
    // to the mean
    double icx = r_max_generalized(fair, x, m, ClaimOrder::IncreasingConvex);
    CHECK(icx == doctest::Approx(1.0).epsilon(1e-6));

    // cash shift makes any catalog member additive over a constants-only
    // traded space, so the additivity precondition accepts the variance
    // loading here
    auto var = make(PrincipleKind::Variance, 3, [](auto& c) { c.theta = 2.0; });
    CHECK_NOTHROW(r_max_generalized(var, x, m, ClaimOrder::Pointwise));
}
