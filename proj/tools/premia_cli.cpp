#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "premia/axioms.hpp"
#include "premia/decompose.hpp"
#include "premia/duality.hpp"
#include "premia/lawinv.hpp"
#include "premia/market.hpp"
#include "premia/oracle.hpp"
#include "premia/scenario.hpp"

using json = nlohmann::ordered_json;
using namespace premia;

namespace {

struct Options {
    std::string scenario_path;
    std::string format = "text";
    double tol = 1e-6;
    std::uint64_t seed = 12345;
    bool strict = false;
    bool use_oracle = false;
};

// exit 3 under --strict when a checked statement evaluates false
struct StrictFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

json meta(const Options& opt) {
    return json{{"tol", opt.tol}, {"seed", opt.seed}};
}

SolveConfig solve_config(const Options& opt) {
    SolveConfig cfg;
    cfg.seed = opt.seed;
    return cfg;
}

void maybe_oracle_check(const Options& opt, const PremiumPrinciple& h, const Claim& x,
                        double engine_value, json& report) {
    if (!opt.use_oracle) return;
    if (x.size() > 3) {
        report["oracle"] = {{"skipped", "oracle limited to n <= 3"}};
        return;
    }
    OracleResult o = brute_r_max(h, x);
    double bound = 10.0 * o.error_bound + 1e-6;  // slack for the local Lipschitz factor
    bool ok = std::abs(o.value - engine_value) <= bound;
    report["oracle"] = {{"value", o.value},
                       {"error_bound", o.error_bound},
                       {"points", o.points},
                       {"agrees", ok}};
    if (!ok && opt.strict) throw StrictFailure("oracle disagrees with the engine value");
}

int run_price(const Options& opt, const Scenario& sc, const std::string& principle,
              const std::string& claim) {
    const PremiumPrinciple& h = sc.principle(principle);
    const Claim& x = sc.claim(claim);
    double v = h.evaluate(x);
    json rep = {{"command", "price"}, {"principle", principle}, {"claim", claim},
                {"premium", v}, {"meta", meta(opt)}};
    emit(opt, rep, "premium " + std::to_string(v) + "\n");
    return 0;
}

int run_decompose(const Options& opt, const Scenario& sc, const std::string& principle,
                  const std::string& claim) {
    const PremiumPrinciple& h = sc.principle(principle);
    const Claim& x = sc.claim(claim);
    Decomposition d = decompose(h, x, solve_config(opt));
    json rep = {{"command", "decompose"}, {"principle", principle}, {"claim", claim},
                {"premium", d.premium}, {"rMax", d.r_max}, {"dMin", d.d_min},
                {"method", to_string(d.method)}, {"gap", d.gap},
                {"optimizer", d.optimizer.values}, {"meta", meta(opt)}};
    maybe_oracle_check(opt, h, x, d.r_max, rep);
    if (opt.strict && d.d_min < -opt.tol)
        throw StrictFailure("negative deviation component");
    char buf[160];
    std::snprintf(buf, sizeof buf, "premium %.12g\nrMax    %.12g\ndMin    %.12g\nmethod  %s\n",
                  d.premium, d.r_max, d.d_min, to_string(d.method).c_str());
    emit(opt, rep, buf);
    return 0;
}

int run_dual(const Options& opt, const Scenario& sc, const std::string& principle,
             const std::string& target) {
    const PremiumPrinciple& h = sc.principle(principle);
    json rep = {{"command", "dual"}, {"principle", principle}, {"target", target},
                {"meta", meta(opt)}};
    std::string text;
    if (sc.claims.count(target)) {
        double v = dual_r_max(h, sc.claim(target), solve_config(opt));
        rep["rMaxDual"] = v;
        text = "rMax (dual) " + std::to_string(v) + "\n";
    } else {
        ConjugateValue cv = conjugate(h, sc.measure(target), solve_config(opt));
        rep["conjugate"] = cv.finite ? json(cv.value) : json("inf");
        rep["finite"] = cv.finite;
        text = "conjugate " + (cv.finite ? std::to_string(cv.value) : "inf") + "\n";
    }
    emit(opt, rep, text);
    return 0;
}

int run_hedge(const Options& opt, const Scenario& sc, const std::string& market,
              const std::string& claim) {
    HedgeResult r = superhedge(sc.market(market), sc.claim(claim));
    json rep = {{"command", "hedge"}, {"market", market}, {"claim", claim},
                {"price", r.price}, {"portfolio", r.portfolio}, {"meta", meta(opt)}};
    emit(opt, rep, "superhedging price " + std::to_string(r.price) + "\n");
    return 0;
}

int run_consistency(const Options& opt, const Scenario& sc, const std::string& principle,
                    const std::string& market) {
    ConsistencyReport r =
        consistency_check(sc.principle(principle), sc.market(market), opt.seed, opt.tol);
    json rep = {{"command", "consistency"}, {"principle", principle}, {"market", market},
                {"precondition_ok", r.precondition_ok},
                {"precondition_note", r.precondition_note},
                {"rmax_equals_superhedge", r.rmax_equals_superhedge},
                {"dominating_traded_claim", r.dominating_traded_claim},
                {"models_match_martingales", r.models_match_martingales},
                {"agree", r.agree}, {"claims_tested", r.claims_tested},
                {"meta", meta(opt)}};
    std::string text = r.precondition_ok
                           ? std::string("statements ") +
                                 (r.rmax_equals_superhedge ? "hold" : "fail") +
                                 (r.agree ? " (coherent)\n" : " (INCOHERENT)\n")
                           : "precondition failed: " + r.precondition_note + "\n";
    emit(opt, rep, text);
    if (opt.strict && r.precondition_ok && !r.agree)
        throw StrictFailure("three-way consistency statements disagree");
    return 0;
}

int run_axioms(const Options& opt, const Scenario& sc, const std::string& principle) {
    const PremiumPrinciple& h = sc.principle(principle);
    ClaimSampler sampler(h.space().n, opt.seed);
    AxiomReport r = check_axioms(h, sampler, opt.tol);
    json rep = {{"command", "axioms"}, {"principle", principle},
                {"trials", r.trials}, {"meta", meta(opt)}};
    std::string text;
    json items = json::array();
    for (const auto& res : r.results) {
        json item = {{"axiom", to_string(res.axiom)}, {"passed", res.passed}};
        if (res.witness) {
            item["witness"] = {{"x", res.witness->x.values},
                              {"lhs", res.witness->lhs},
                              {"rhs", res.witness->rhs}};
            if (res.witness->y) item["witness"]["y"] = res.witness->y->values;
        }
        items.push_back(item);
        text += to_string(res.axiom) + (res.passed ? ": pass\n" : ": FAIL\n");
    }
    rep["axioms"] = items;
    emit(opt, rep, text);
    bool flagged = false;
    const auto& f = h.flags();
    if (f.convex && !r.get(Axiom::Convexity).passed) flagged = true;
    if (f.sublinear && !r.get(Axiom::PositiveHomogeneity).passed) flagged = true;
    if (f.monotone && !r.get(Axiom::Monotonicity).passed) flagged = true;
    if (!r.get(Axiom::CashShift).passed || !r.get(Axiom::NonnegativeOnLosses).passed)
        flagged = true;
    if (opt.strict && flagged) throw StrictFailure("declared axiom violated");
    return 0;
}

int run_lawinv(const Options& opt, const Scenario& sc, const std::string& principle,
               const std::string& measure) {
    const PremiumPrinciple& h = sc.principle(principle);
    const DiscreteMeasure& p = sc.measure(measure);
    DominanceResult dom = dominance_check(h, p, 200, opt.seed);
    LawInvarianceResult li = law_invariance_check(h, p, 200, opt.seed);
    SafetyLoadingResult sl = safety_loading_check(h, p, 200, opt.seed);
    json rep = {{"command", "lawinv"}, {"principle", principle}, {"measure", measure},
                {"dominated", dom.dominated}, {"dominance_vacuous", dom.vacuous},
                {"law_invariant", li.invariant}, {"law_invariance_vacuous", li.vacuous},
                {"r_max_inherits", li.invariant ? li.r_max_inherits : dom.r_max_inherits},
                {"safety_loading", sl.holds}, {"safety_loading_exploratory", sl.exploratory},
                {"meta", meta(opt)}};
    if (li.witness) rep["law_invariance_witness"] = li.witness->values;
    if (sl.witness) rep["safety_loading_witness"] = sl.witness->values;
    std::string text = std::string("dominated: ") + (dom.vacuous ? "vacuous" : dom.dominated ? "yes" : "no") +
                       "\nlaw-invariant: " + (li.vacuous ? "vacuous" : li.invariant ? "yes" : "no") +
                       "\nsafety loading: " + (sl.holds ? "yes" : "no") + "\n";
    emit(opt, rep, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"premium-principle engine: evaluation, decomposition, duality, hedging"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-s,--scenario", opt.scenario_path, "scenario JSON file")->required();
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tol", opt.tol, "numeric tolerance");
    app.add_option("--seed", opt.seed, "sampling seed");
    app.add_flag("--strict", opt.strict, "exit 3 when a checked statement fails");
    app.add_flag("--oracle", opt.use_oracle, "cross-check against the brute-force oracle (n <= 3)");

    std::string arg1, arg2;
    auto* price = app.add_subcommand("price", "evaluate a premium");
    price->add_option("principle", arg1)->required();
    price->add_option("claim", arg2)->required();
    auto* dec = app.add_subcommand("decompose", "risk/deviation split");
    dec->add_option("principle", arg1)->required();
    dec->add_option("claim", arg2)->required();
    auto* dual = app.add_subcommand("dual", "dual r_max (claim) or conjugate (measure)");
    dual->add_option("principle", arg1)->required();
    dual->add_option("target", arg2)->required();
    auto* hedge = app.add_subcommand("hedge", "superhedging price");
    hedge->add_option("market", arg1)->required();
    hedge->add_option("claim", arg2)->required();
    auto* cons = app.add_subcommand("consistency", "market consistency equivalences");
    cons->add_option("principle", arg1)->required();
    cons->add_option("market", arg2)->required();
    auto* ax = app.add_subcommand("axioms", "axiom diagnostics");
    ax->add_option("principle", arg1)->required();
    auto* law = app.add_subcommand("lawinv", "dominance / law invariance / safety loading");
    law->add_option("principle", arg1)->required();
    law->add_option("measure", arg2)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Scenario sc = Scenario::parse_file(opt.scenario_path);
        if (price->parsed()) return run_price(opt, sc, arg1, arg2);
        if (dec->parsed()) return run_decompose(opt, sc, arg1, arg2);
        if (dual->parsed()) return run_dual(opt, sc, arg1, arg2);
        if (hedge->parsed()) return run_hedge(opt, sc, arg1, arg2);
        if (cons->parsed()) return run_consistency(opt, sc, arg1, arg2);
        if (ax->parsed()) return run_axioms(opt, sc, arg1);
        if (law->parsed()) return run_lawinv(opt, sc, arg1, arg2);
        std::cerr << "no command\n";
        return 1;
    } catch (const StrictFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }
}
