#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premia/principles.hpp"
#include "premia/sampler.hpp"

namespace premia {

enum class Axiom {
    CashShift,          // (P1) H(X+m) = H(X)+m
    NonnegativeOnLosses,// (P2) H(0)=0 and H(X) >= 0 for X >= 0
    Convexity,
    PositiveHomogeneity,
    Monotonicity,
    Internality,        // H(X) <= 0 for X <= 0
    NoRipoff,           // H(X) <= sup X
};

std::string to_string(Axiom a);

struct AxiomWitness {
    Claim x;
    std::optional<Claim> y;       // second claim, when the axiom is binary
    double scalar = 0.0;          // shift m / mixing lambda / homogeneity factor
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AxiomResult {
    Axiom axiom;
    bool passed = true;
    std::optional<AxiomWitness> witness;
};

// Sampling-based report: a pass means "no counterexample found among the
// sampled claims", never a proof.
struct AxiomReport {
    std::vector<AxiomResult> results;
    int trials = 0;
    double tol = 0.0;

    bool all_passed() const;
    const AxiomResult& get(Axiom a) const;
};

AxiomReport check_axioms(const PremiumPrinciple& h, ClaimSampler& sampler, double tol);

} // namespace premia
