#include "premia/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace premia {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("scenario: " + where + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail(where, "unknown field '" + it.key() + "'");
}

// every number in the scenario format is a decimal string
double number(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "numbers must be decimal strings");
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    double out;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        fail(where, "'" + s + "' is not a decimal number");
    }
    if (used != s.size()) fail(where, "'" + s + "' has trailing characters");
    return out;
}

int integer(const json& v, const std::string& where) {
    double d = number(v, where);
    int i = (int)std::llround(d);
    if (std::abs(d - i) > 1e-12) fail(where, "expected an integer");
    return i;
}

std::vector<double> number_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of decimal strings");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(number(e, where));
    return out;
}

ScalarFn parse_scalar_fn(const json& v, const std::string& where) {
    if (!v.is_object()) fail(where, "expected an object");
    reject_unknown(v, {"kind", "exponent", "scale", "rate", "slope_neg", "slope_pos"}, where);
    if (!v.contains("kind")) fail(where, "missing 'kind'");
    const std::string kind = v.at("kind").get<std::string>();
    if (kind == "identity") return ScalarFn::identity();
    if (kind == "power")
        return ScalarFn::power(number(v.at("exponent"), where),
                               v.contains("scale") ? number(v.at("scale"), where) : 1.0);
    if (kind == "exponential") return ScalarFn::exponential(number(v.at("rate"), where));
    if (kind == "piecewise_linear")
        return ScalarFn::piecewise_linear(number(v.at("slope_neg"), where),
                                          number(v.at("slope_pos"), where));
    fail(where, "unknown scalar function kind '" + kind + "'");
}

Distortion parse_distortion(const json& v, const std::string& where) {
    if (!v.is_object()) fail(where, "expected an object");
    reject_unknown(v, {"kind", "param"}, where);
    const std::string kind = v.at("kind").get<std::string>();
    if (kind == "identity") return Distortion::identity();
    if (kind == "power") return Distortion::power(number(v.at("param"), where));
    if (kind == "proportional_hazard")
        return Distortion::proportional_hazard(number(v.at("param"), where));
    fail(where, "unknown distortion kind '" + kind + "'");
}

} // namespace

Scenario Scenario::parse_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document", "top level must be an object");
    reject_unknown(doc, {"schema", "space", "measures", "claims", "principles", "markets"},
                   "document");
    if (!doc.contains("schema") || integer(doc.at("schema"), "schema") != 1)
        fail("schema", "expected \"1\"");

    Scenario sc;
    {
        const json& sp = doc.at("space");
        reject_unknown(sp, {"n", "labels"}, "space");
        std::vector<std::string> labels;
        if (sp.contains("labels"))
            for (const auto& l : sp.at("labels")) labels.push_back(l.get<std::string>());
        sc.space = StateSpace::make(integer(sp.at("n"), "space.n"), std::move(labels));
    }

    if (doc.contains("measures"))
        for (auto it = doc.at("measures").begin(); it != doc.at("measures").end(); ++it) {
            auto w = number_list(it.value(), "measures." + it.key());
            if ((int)w.size() != sc.space.n)
                fail("measures." + it.key(), "dimension mismatch");
            sc.measures.emplace(it.key(), DiscreteMeasure::make(std::move(w)));
        }

    if (doc.contains("claims"))
        for (auto it = doc.at("claims").begin(); it != doc.at("claims").end(); ++it)
            sc.claims.emplace(it.key(), Claim::validated(
                number_list(it.value(), "claims." + it.key()), sc.space));

    if (doc.contains("principles"))
        for (auto it = doc.at("principles").begin(); it != doc.at("principles").end(); ++it) {
            const std::string where = "principles." + it.key();
            const json& v = it.value();
            reject_unknown(v,
                           {"kind", "baseline", "model_set", "theta", "p", "epsilon",
                            "loss_fn", "ambiguity_fn", "endowment", "second_order_weights",
                            "distortion"},
                           where);
            PrincipleConfig cfg;
            cfg.kind = principle_kind_from_string(v.at("kind").get<std::string>());
            if (v.contains("baseline")) {
                const std::string name = v.at("baseline").get<std::string>();
                if (!sc.measures.count(name)) fail(where, "unknown measure '" + name + "'");
                cfg.baseline = sc.measures.at(name);
            }
            if (v.contains("model_set"))
                for (const auto& m : v.at("model_set")) {
                    const std::string name = m.get<std::string>();
                    if (!sc.measures.count(name)) fail(where, "unknown measure '" + name + "'");
                    cfg.model_set.push_back(sc.measures.at(name));
                }
            if (v.contains("theta")) cfg.theta = number(v.at("theta"), where + ".theta");
            if (v.contains("p")) cfg.p = number(v.at("p"), where + ".p");
            if (v.contains("epsilon")) cfg.epsilon = number(v.at("epsilon"), where + ".epsilon");
            if (v.contains("loss_fn")) cfg.loss_fn = parse_scalar_fn(v.at("loss_fn"), where + ".loss_fn");
            if (v.contains("ambiguity_fn"))
                cfg.ambiguity_fn = parse_scalar_fn(v.at("ambiguity_fn"), where + ".ambiguity_fn");
            if (v.contains("endowment")) {
                const std::string name = v.at("endowment").get<std::string>();
                if (!sc.claims.count(name)) fail(where, "unknown claim '" + name + "'");
                cfg.endowment = sc.claims.at(name);
            }
            if (v.contains("second_order_weights"))
                cfg.second_order_weights =
                    number_list(v.at("second_order_weights"), where + ".second_order_weights");
            if (v.contains("distortion"))
                cfg.distortion = parse_distortion(v.at("distortion"), where + ".distortion");
            sc.principles.emplace(it.key(), build_principle(std::move(cfg), sc.space));
        }

    if (doc.contains("markets"))
        for (auto it = doc.at("markets").begin(); it != doc.at("markets").end(); ++it) {
            const std::string where = "markets." + it.key();
            const json& v = it.value();
            reject_unknown(v, {"basis", "prices"}, where);
            std::vector<Claim> basis;
            for (const auto& b : v.at("basis"))
                basis.push_back(Claim::validated(number_list(b, where + ".basis"), sc.space));
            std::vector<double> prices = number_list(v.at("prices"), where + ".prices");
            sc.markets.emplace(it.key(),
                               MarketModel::make(sc.space, std::move(basis), std::move(prices)));
        }

    return sc;
}

Scenario Scenario::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("scenario: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

namespace {

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name,
                                      const char* what) {
    auto it = m.find(name);
    if (it == m.end())
        throw ValidationError(std::string("scenario: no ") + what + " named '" + name + "'");
    return it->second;
}

} // namespace

const DiscreteMeasure& Scenario::measure(const std::string& name) const {
    return lookup(measures, name, "measure");
}
const Claim& Scenario::claim(const std::string& name) const {
    return lookup(claims, name, "claim");
}
const PremiumPrinciple& Scenario::principle(const std::string& name) const {
    return lookup(principles, name, "principle");
}
const MarketModel& Scenario::market(const std::string& name) const {
    return lookup(markets, name, "market");
}

} // namespace premia
