#include <doctest.h>

#include "premia/lawinv.hpp"

using namespace premia;

namespace {

PremiumPrinciple make(PrincipleKind kind, const DiscreteMeasure& p,
                      const std::function<void(PrincipleConfig&)>& fill = nullptr) {
    PrincipleConfig cfg;
    cfg.kind = kind;
    cfg.baseline = p;
    if (fill) fill(cfg);
    return build_principle(std::move(cfg), StateSpace::make(p.size()));
}

} // namespace

TEST_CASE("dominance: baseline principles ignore null states, worst case does not") {
    auto p = DiscreteMeasure::make({0.5, 0.5, 0.0});
    auto fair = make(PrincipleKind::Fair, p);
    DominanceResult r = dominance_check(fair, p);
    CHECK_FALSE(r.vacuous);
    CHECK(r.dominated);
    CHECK(r.r_max_inherits);

    auto wc = make(PrincipleKind::WorstCase, p);
    DominanceResult rw = dominance_check(wc, p);
    CHECK_FALSE(rw.dominated);  // sup reacts to the null third state
    CHECK(rw.witness_before.has_value());
    CHECK(rw.witness_after.has_value());

    // no null states: nothing to test
    DominanceResult rv = dominance_check(fair, DiscreteMeasure::uniform(3));
    CHECK(rv.vacuous);
}

TEST_CASE("law invariance under a uniform baseline") {
    auto p = DiscreteMeasure::uniform(3);
    for (auto kind : {PrincipleKind::Fair, PrincipleKind::Variance,
                      PrincipleKind::AbsoluteDeviation, PrincipleKind::AVaR}) {
        auto h = make(kind, p, [](auto& c) {
            c.theta = 1.0;
            c.epsilon = 0.5;
        });
        LawInvarianceResult r = law_invariance_check(h, p);
        CHECK(r.invariant);
        CHECK_FALSE(r.vacuous);
        CHECK(r.r_max_inherits);
    }
}

TEST_CASE("economic principle breaks law invariance") {
    auto p = DiscreteMeasure::uniform(2);
    auto ec = make(PrincipleKind::Economic, p, [](auto& c) {
        c.loss_fn = ScalarFn::power(2.0, 0.5);
        c.endowment = Claim{0.0, 1.0};
    });
    // X = (0,1) and its swap share a law but price at 1 vs 0
    LawInvarianceResult r = law_invariance_check(ec, p);
    CHECK_FALSE(r.invariant);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_permutation.size() == 2);
}

TEST_CASE("non-uniform baselines restrict to equal-probability blocks") {
    auto p = DiscreteMeasure::make({0.25, 0.25, 0.5});
    auto var = make(PrincipleKind::Variance, p, [](auto& c) { c.theta = 2.0; });
    LawInvarianceResult r = law_invariance_check(var, p);
    CHECK(r.invariant);  // swapping the two 1/4 states preserves the law
    CHECK_FALSE(r.vacuous);

    // all probabilities distinct: no admissible nontrivial permutation
    auto q = DiscreteMeasure::make({0.2, 0.3, 0.5});
    LawInvarianceResult rv = law_invariance_check(make(PrincipleKind::Fair, q), q);
    CHECK(rv.vacuous);
}

TEST_CASE("safety loading") {
    auto p = DiscreteMeasure::uniform(2);
    auto var = make(PrincipleKind::Variance, p, [](auto& c) { c.theta = 2.0; });
    SafetyLoadingResult ok = safety_loading_check(var, p);
    CHECK(ok.holds);
    CHECK_FALSE(ok.exploratory);

    // the median premium can sit below the mean: X = (0, 1) prices at 0
    auto q = make(PrincipleKind::Quantile, p, [](auto& c) { c.epsilon = 0.5; });
    SafetyLoadingResult bad = safety_loading_check(q, p);
    CHECK_FALSE(bad.holds);
    CHECK(bad.exploratory);  // quantile lacks convexity
    REQUIRE(bad.witness.has_value());
}
