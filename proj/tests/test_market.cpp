#include <doctest.h>

#include "premia/market.hpp"

using namespace premia;

namespace {

PremiumPrinciple fair(const DiscreteMeasure& p, int n) {
    PrincipleConfig cfg;
    cfg.kind = PrincipleKind::Fair;
    cfg.baseline = p;
    return build_principle(std::move(cfg), StateSpace::make(n));
}

} // namespace

TEST_CASE("market construction: unit claim and arbitrage checks") {
    StateSpace s = StateSpace::make(2);
    CHECK_NOTHROW(MarketModel::make(s, {Claim::constant(2, 1.0), Claim{0.0, 2.0}},
                                    {1.0, 1.0}));
    // no unit claim priced at one
    CHECK_THROWS_AS(MarketModel::make(s, {Claim{0.0, 2.0}}, {1.0}), ValidationError);
    CHECK_THROWS_AS(MarketModel::make(s, {Claim::constant(2, 1.0)}, {2.0}), ValidationError);
    // nonnegative traded claim with a negative price
    CHECK_THROWS_AS(MarketModel::make(s, {Claim::constant(2, 1.0), Claim{1.0, 0.0}},
                                      {1.0, -0.25}),
                    ValidationError);
    // mismatched lengths
    CHECK_THROWS_AS(MarketModel::make(s, {Claim::constant(2, 1.0)}, {1.0, 2.0}),
                    ValidationError);
}

TEST_CASE("superhedging price in a complete two-state market") {
    MarketModel m = MarketModel::make(StateSpace::make(2),
                                      {Claim::constant(2, 1.0), Claim{0.0, 2.0}},
                                      {1.0, 1.0});
    HedgeResult r = superhedge(m, Claim{0.0, 1.0});
    CHECK(r.price == doctest::Approx(0.5));  // unique pricing measure (1/2, 1/2)
    // the cash plus the zero-cost portfolio dominates the claim
    Claim port = m.combine(r.portfolio);
    CHECK(m.price_of(r.portfolio) == doctest::Approx(0.0).epsilon(1e-8));
    for (int i = 0; i < 2; ++i) CHECK(r.price + port[i] >= Claim{0.0, 1.0}[i] - 1e-8);

    // constants are priced at face value
    CHECK(superhedge(m, Claim::constant(2, 3.25)).price == doctest::Approx(3.25));
}

TEST_CASE("superhedging in an incomplete market upper-bounds every measure") {
    MarketModel m = MarketModel::make(StateSpace::make(3),
                                      {Claim::constant(3, 1.0)}, {1.0});
    // only cash trades: the superhedge of X is sup X
    HedgeResult r = superhedge(m, Claim{0.0, 1.0, 2.0});
    CHECK(r.price == doctest::Approx(2.0));
}

TEST_CASE("martingale measure enumeration") {
    MarketModel complete = MarketModel::make(StateSpace::make(2),
                                             {Claim::constant(2, 1.0), Claim{0.0, 2.0}},
                                             {1.0, 1.0});
    auto qs = enumerate_martingale_measures(complete);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0][0] == doctest::Approx(0.5));
    CHECK(martingale_membership(complete, qs[0]));
    CHECK_FALSE(martingale_membership(complete, DiscreteMeasure::make({0.25, 0.75})));

    MarketModel cash_only = MarketModel::make(StateSpace::make(3),
                                              {Claim::constant(3, 1.0)}, {1.0});
    auto verts = enumerate_martingale_measures(cash_only);
    CHECK(verts.size() == 3);  // whole simplex: vertices are the point masses
    for (const auto& q : verts) CHECK(martingale_membership(cash_only, q));
}

TEST_CASE("consistency diagnostic: calibrated fair principle passes") {
    MarketModel m = MarketModel::make(StateSpace::make(2),
                                      {Claim::constant(2, 1.0), Claim{0.0, 2.0}},
                                      {1.0, 1.0});
    // baseline equal to the unique martingale measure: fully consistent
    auto h = fair(DiscreteMeasure::make({0.5, 0.5}), 2);
    ConsistencyReport r = consistency_check(h, m);
    CHECK(r.precondition_ok);
    CHECK(r.rmax_equals_superhedge);
    CHECK(r.dominating_traded_claim);
    CHECK(r.models_match_martingales);
    CHECK(r.agree);
    CHECK(r.claims_tested > 0);
}

TEST_CASE("consistency diagnostic: thin market fails all three together") {
    MarketModel cash_only = MarketModel::make(StateSpace::make(2),
                                              {Claim::constant(2, 1.0)}, {1.0});
    auto h = fair(DiscreteMeasure::make({0.5, 0.5}), 2);
    ConsistencyReport r = consistency_check(h, cash_only);
    CHECK(r.precondition_ok);  // H is cash additive, so it extends F on constants
    CHECK_FALSE(r.rmax_equals_superhedge);   // sup X > E X for non-constants
    CHECK_FALSE(r.dominating_traded_claim);
    CHECK_FALSE(r.models_match_martingales); // {P} vs the whole simplex
    CHECK(r.agree);                          // the equivalence itself survives
}

TEST_CASE("consistency diagnostic: miscalibrated principle flags the precondition") {
    MarketModel m = MarketModel::make(StateSpace::make(2),
                                      {Claim::constant(2, 1.0), Claim{0.0, 2.0}},
                                      {1.0, 1.0});
    auto h = fair(DiscreteMeasure::make({0.25, 0.75}), 2);  // prices B at 1.5, not 1
    ConsistencyReport r = consistency_check(h, m);
    CHECK_FALSE(r.precondition_ok);
}
