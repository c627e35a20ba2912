#pragma once

#include <map>
#include <string>

#include "premia/market.hpp"
#include "premia/principles.hpp"

namespace premia {

// A scenario file bundles everything a CLI run can reference by name. All
// numeric values in the JSON are decimal strings (parsed to binary floats;
// see the README for the precision caveat); unknown fields are rejected.
struct Scenario {
    StateSpace space;
    std::map<std::string, DiscreteMeasure> measures;
    std::map<std::string, Claim> claims;
    std::map<std::string, PremiumPrinciple> principles;
    std::map<std::string, MarketModel> markets;

    static Scenario parse_file(const std::string& path);
    static Scenario parse_text(const std::string& text);

    const DiscreteMeasure& measure(const std::string& name) const;
    const Claim& claim(const std::string& name) const;
    const PremiumPrinciple& principle(const std::string& name) const;
    const MarketModel& market(const std::string& name) const;
};

} // namespace premia
