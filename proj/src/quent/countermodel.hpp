#ifndef QUENT_COUNTERMODEL_HPP
#define QUENT_COUNTERMODEL_HPP

#include <optional>
#include <vector>

#include "quent/space.hpp"
#include "quent/theory.hpp"

namespace quent {

struct CountermodelOptions {
    std::size_t maxWorlds = 3;
    std::size_t budget = 5000000;  // candidate (space, valuation) pairs
    // Distance pool; when empty, the default pool is used: all sub-multiset
    // sums of theory degrees up to the goal degree, the goal degree itself,
    // and one value strictly above it.
    std::vector<Degree> degreePool;
};

// Deterministic bounded search: increasing world count, then lexicographic
// over distance assignments, then over valuations; the first model that
// satisfies every element of t and falsifies the goal is returned.
// Exhaustion returns nullopt and is not a proof of entailment.
std::optional<Model> find_countermodel(const Theory& t, const GradedImplication& goal,
                                       const CountermodelOptions& opts = {});

// The default pool described above (0 included; callers using entries as
// off-diagonal distances must skip 0 to respect M1).
std::vector<Degree> default_degree_pool(const Theory& t, const GradedImplication& goal);

}  // namespace quent

#endif
