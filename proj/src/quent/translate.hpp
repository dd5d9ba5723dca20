#ifndef QUENT_TRANSLATE_HPP
#define QUENT_TRANSLATE_HPP

#include "quent/forest.hpp"
#include "quent/rule_proof.hpp"
#include "quent/theory.hpp"

namespace quent {

// Structural induction over a verified forest, emitting a rule proof of the
// goal from the flattening of tb. Preconditions: the forest verifies against
// (tb, goal) and every * node is terminal and sibling-free.
RuleProof forest_to_rule_proof(const ProofForest& f, const BasicTheory& tb,
                               const GradedImplication& goal);

// Induction over the proof's steps, building a forest for each rule and
// returning the final conclusion's forest. Precondition: the proof checks
// against flatten(tb).
ProofForest rule_proof_to_forest(const RuleProof& p, const BasicTheory& tb);

}  // namespace quent

#endif
