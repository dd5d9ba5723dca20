#ifndef QUENT_ORACLE_HPP
#define QUENT_ORACLE_HPP

#include "quent/prove.hpp"

namespace quent {

// Independent oracle: exhaustive minimization over all forest proofs with at
// most maxNodes nodes, labels ranging over every clause of the instance's
// variables (consistent or not) plus *, every justification choice, and
// every admissible child subset. Returns the minimum verified length, or
// not-provable when nothing verifies within the bound (which is not a proof
// of non-entailment). Intended for desk-scale cross-checks only.
DegreeResult brute_force_degree(const BasicTheory& tb, const Formula& zeta, const Formula& eta,
                                std::size_t maxNodes);

}  // namespace quent

#endif
