#ifndef QUENT_RULE_PROOF_HPP
#define QUENT_RULE_PROOF_HPP

#include <string>
#include <variant>
#include <vector>

#include "quent/theory.hpp"

namespace quent {

struct RAxiom {
    std::size_t theoryIndex;
};
struct R1 {};
struct R2 {
    std::size_t premise;
    Formula gamma;
};
struct R3 {
    std::size_t premise;
};
struct R4 {
    std::size_t premise;
};
struct R5 {
    std::size_t premise1;
    std::size_t premise2;
};
struct R6 {
    std::size_t premise1;
    std::size_t premise2;
};
using RuleJustification = std::variant<RAxiom, R1, R2, R3, R4, R5, R6>;

struct RuleStep {
    GradedImplication conclusion;
    RuleJustification justification;
};

struct RuleProof {
    std::vector<RuleStep> steps;

    bool empty() const { return steps.empty(); }
    const GradedImplication& conclusion() const { return steps.back().conclusion; }
};

// Standard is the six-rule calculus. SmallestWeight drops R3 and reads R5
// with conclusion degree max(premise degrees) instead of requiring equal
// premise degrees.
enum class CalculusVariant { Standard, SmallestWeight };

struct StepViolation {
    std::size_t step;
    std::string message;
};

struct ProofReport {
    bool ok = false;
    std::vector<StepViolation> violations;
};

// Formula comparisons are syntactic; Boolean equivalence is only reachable
// through explicit R1/R6 steps.
ProofReport check_rule_proof(const RuleProof& p, const Theory& t,
                             CalculusVariant variant = CalculusVariant::Standard);

// Rewrites between the two calculi: dropping R3 steps with degrees
// recomputed downstream, resp. reintroducing R3 lifts before each R5.
RuleProof to_smallest_weight(const RuleProof& p);
RuleProof from_smallest_weight(const RuleProof& p);

// One step per line: "<idx>: <implication> ; axiom <k> | r1 | r2 <p>
// gamma=<formula> | r3 <p> | r4 <p> | r5 <p1> <p2> | r6 <p1> <p2>".
RuleProof parse_rule_proof(const std::string& text);
std::string render_rule_proof(const RuleProof& p);

std::string render_proof_report(const ProofReport& r);

}  // namespace quent

#endif
