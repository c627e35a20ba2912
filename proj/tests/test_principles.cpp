#include <doctest.h>

#include "premia/axioms.hpp"
#include "premia/principles.hpp"

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

} // namespace

TEST_CASE("catalog values on hand-computed instances") {
    Claim x01{0.0, 1.0};
    Claim x4{0.0, 1.0, 2.0, 3.0};

    CHECK(make(PrincipleKind::Fair, 2)(x01) == doctest::Approx(0.5));
    CHECK(make(PrincipleKind::WorstCase, 2)(x01) == doctest::Approx(1.0));

    auto var = make(PrincipleKind::Variance, 2, [](auto& c) { c.theta = 2.0; });
    CHECK(var(x01) == doctest::Approx(0.75));  // 1/2 + (theta/2) * 1/4
    CHECK(var(Claim{-2.0, 2.0}) == doctest::Approx(4.0));

    auto sd = make(PrincipleKind::StdDev, 2, [](auto& c) { c.theta = 1.0; });
    CHECK(sd(x01) == doctest::Approx(1.0));

    auto mad = make(PrincipleKind::MeanAbsDev, 2, [](auto& c) { c.theta = 0.5; });
    CHECK(mad(x01) == doctest::Approx(0.75));

    auto lp1 = make(PrincipleKind::LpDeviation, 2, [](auto& c) { c.theta = 0.5; c.p = 1.0; });
    CHECK(lp1(x01) == doctest::Approx(mad(x01)));
    auto lp2 = make(PrincipleKind::LpDeviation, 2, [](auto& c) { c.theta = 1.0; c.p = 2.0; });
    CHECK(lp2(x01) == doctest::Approx(sd(x01)));

    auto q = make(PrincipleKind::Quantile, 4, [](auto& c) { c.epsilon = 0.5; });
    CHECK(q(x4) == doctest::Approx(1.0));
    auto av = make(PrincipleKind::AVaR, 4, [](auto& c) { c.epsilon = 0.5; });
    CHECK(av(x4) == doctest::Approx(2.5));

    auto ad = make(PrincipleKind::AbsoluteDeviation, 4, [](auto& c) { c.theta = 1.0; });
    CHECK(ad(x4) == doctest::Approx(2.5));  // 1.5 + 1 * mean |X - med|, med = 1

    auto ch = make(PrincipleKind::ChoquetDistortion, 2,
                   [](auto& c) { c.distortion = Distortion::power(2.0); });
    CHECK(ch(x01) == doctest::Approx(0.25));
}

TEST_CASE("model-set members") {
    Claim x01{0.0, 1.0};
    std::vector<DiscreteMeasure> delta = {DiscreteMeasure::make({1.0, 0.0}),
                                          DiscreteMeasure::make({0.0, 1.0})};

    auto mm = make(PrincipleKind::MaxminExpectedLoss, 2, [&](auto& c) {
        c.model_set = delta;
        c.loss_fn = ScalarFn::identity();
    });
    CHECK(mm(x01) == doctest::Approx(1.0));  // worst model is the point mass on state 2

    auto sa = make(PrincipleKind::SmoothAmbiguity, 2, [&](auto& c) {
        c.model_set = delta;
        c.second_order_weights = {0.5, 0.5};
        c.loss_fn = ScalarFn::identity();
        c.ambiguity_fn = ScalarFn::identity();
    });
    CHECK(sa(x01) == doctest::Approx(0.5));

    CHECK(ambiguity_index(delta, x01) == doctest::Approx(0.5));
    auto ai = make(PrincipleKind::AmbiguityIndex, 2, [&](auto& c) {
        c.model_set = delta;
        c.theta = 1.0;
    });
    CHECK(ai(x01) == doctest::Approx(1.0));  // 1/2 + theta * 1/2

    auto rv = make(PrincipleKind::RobustVariance, 2, [](auto& c) {
        c.model_set = {DiscreteMeasure::make({0.5, 0.5}), DiscreteMeasure::make({0.9, 0.1})};
        c.theta = 1.0;
    });
    // sup of means is 0.5, sup of variances is 0.25; loading factor is theta
    CHECK(rv(x01) == doctest::Approx(0.75));
}

TEST_CASE("economic principle prices with the marginal-loss density") {
    auto ec = make(PrincipleKind::Economic, 2, [](auto& c) {
        c.loss_fn = ScalarFn::power(2.0, 0.5);  // ell(x) = x^2 / 2
        c.endowment = Claim{0.0, 1.0};
    });
    REQUIRE(ec.economic_measure().has_value());
    CHECK((*ec.economic_measure())[0] == doctest::Approx(0.0));
    CHECK((*ec.economic_measure())[1] == doctest::Approx(1.0));
    CHECK(ec(Claim{0.0, 1.0}) == doctest::Approx(1.0));
    CHECK(ec(Claim{1.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("declared flags match the catalog") {
    auto var = make(PrincipleKind::Variance, 2, [](auto& c) { c.theta = 2.0; });
    CHECK(var.flags().convex);
    CHECK_FALSE(var.flags().monotone);
    CHECK_FALSE(var.flags().sublinear);

    auto av = make(PrincipleKind::AVaR, 4, [](auto& c) { c.epsilon = 0.5; });
    CHECK(av.flags().convex);
    CHECK(av.flags().sublinear);
    CHECK(av.flags().monotone);
    CHECK(av.flags().piecewise_linear);

    auto q = make(PrincipleKind::Quantile, 4, [](auto& c) { c.epsilon = 0.5; });
    CHECK_FALSE(q.flags().convex);
    CHECK(q.flags().monotone);

    auto sd = make(PrincipleKind::StdDev, 2, [](auto& c) { c.theta = 1.0; });
    CHECK(sd.flags().sublinear);
    CHECK_FALSE(sd.flags().monotone);
}

TEST_CASE("axiom checker validates declared flags on samples") {
    auto run = [](const PremiumPrinciple& h) {
        ClaimSampler sampler(h.space().n, 2024);
        return check_axioms(h, sampler, 1e-9);
    };

    auto fair = make(PrincipleKind::Fair, 3);
    AxiomReport r = run(fair);
    CHECK(r.all_passed());

    auto var = make(PrincipleKind::Variance, 3, [](auto& c) { c.theta = 2.0; });
    r = run(var);
    CHECK(r.get(Axiom::CashShift).passed);
    CHECK(r.get(Axiom::NonnegativeOnLosses).passed);
    CHECK(r.get(Axiom::Convexity).passed);
    CHECK_FALSE(r.get(Axiom::Monotonicity).passed);   // counterexample expected
    CHECK_FALSE(r.get(Axiom::PositiveHomogeneity).passed);
    REQUIRE(r.get(Axiom::Monotonicity).witness.has_value());

    auto av = make(PrincipleKind::AVaR, 3, [](auto& c) { c.epsilon = 0.5; });
    r = run(av);
    CHECK(r.get(Axiom::PositiveHomogeneity).passed);
    CHECK(r.get(Axiom::Monotonicity).passed);
    CHECK(r.get(Axiom::NoRipoff).passed);
    CHECK(r.get(Axiom::Internality).passed);

    // the median (eps = 1/2) is monotone but not convex
    auto q = make(PrincipleKind::Quantile, 3, [](auto& c) { c.epsilon = 0.5; });
    r = run(q);
    CHECK_FALSE(r.get(Axiom::Convexity).passed);
    CHECK(r.get(Axiom::Monotonicity).passed);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(make(PrincipleKind::Variance, 2, [](auto& c) { c.theta = -1.0; }),
                    ValidationError);
    CHECK_THROWS_AS(make(PrincipleKind::Quantile, 2, [](auto& c) { c.epsilon = 1.5; }),
                    ValidationError);
    CHECK_THROWS_AS(make(PrincipleKind::MaxminExpectedLoss, 2, nullptr), ValidationError);
    CHECK_THROWS_AS(make(PrincipleKind::Economic, 2, nullptr), ValidationError);
    CHECK_THROWS_AS(make(PrincipleKind::LpDeviation, 2,
                         [](auto& c) { c.theta = 1.0; c.p = 0.5; }),
                    ValidationError);
    // round trip of kind names
    for (auto kind : {PrincipleKind::Fair, PrincipleKind::AbsoluteDeviation,
                      PrincipleKind::ChoquetDistortion})
        CHECK(principle_kind_from_string(to_string(kind)) == kind);
}
