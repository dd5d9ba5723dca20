#ifndef QUENT_PROVE_HPP
#define QUENT_PROVE_HPP

#include <optional>
#include <vector>

#include "quent/forest.hpp"
#include "quent/theory.hpp"

namespace quent {

struct DegreeResult {
    bool provable = false;
    std::optional<Degree> degree;       // minimal degree when provable
    std::optional<ProofForest> forest;  // witness verifying at that degree
};

struct ProveOptions {
    std::size_t stateBudget = 2000000;  // cap on 3^|V| clause-lattice states
    std::size_t nodeBudget = 200000;    // cap on reconstructed witness nodes
};

// Cost table over consistent clauses on the instance's variable universe,
// exposed for property checks (monotonicity, sum structure).
struct CostTable {
    std::vector<Variable> vars;
    // index in base 3 over vars (0 absent, 1 positive, 2 negative);
    // nullopt = no proof tree exists for that clause
    std::vector<std::optional<Degree>> cost;

    std::size_t states() const { return cost.size(); }
    Clause clauseAt(std::size_t index) const;
    std::size_t indexOf(const Clause& c) const;
};

// Minimal provable degree of zeta ->[r] eta from tb, with a verifying
// forest witness. Monotone value iteration with combination
// weight + max(children) over the clause lattice; complete relative to
// forest proofs over the instance's variables.
DegreeResult entailment_degree(const BasicTheory& tb, const Formula& zeta, const Formula& eta,
                               const ProveOptions& opts = {}, CostTable* tableOut = nullptr);

}  // namespace quent

#endif
