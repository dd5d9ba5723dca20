#ifndef QUENT_NORMALIZE_HPP
#define QUENT_NORMALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "quent/forest.hpp"
#include "quent/theory.hpp"

namespace quent {

struct NormalizePass {
    enum class Kind {
        PruneImproper,    // every * terminal and without siblings
        CapInconsistent,  // every inconsistent clause capped by a single *
        FreshSplits,      // no split on a variable already present
        StandardEnds,     // roots/leaves over the goal's standard polarities
        DropUnused,       // no unused literal in any proper node
        PurgePolarity,    // eliminate a polarity absent from goal and theory
    };

    Kind kind = Kind::PruneImproper;
    Variable var;          // PurgePolarity only
    bool positive = true;  // PurgePolarity only

    // "prune-improper", ..., "purge-polarity:x:+" / "purge-polarity:x:-"
    static std::optional<NormalizePass> parse(const std::string& tag);
    std::string str() const;
};

// The default full-normalization order; drop-unused runs to fixpoint.
std::vector<NormalizePass> default_normalize_passes();

// Precondition: f verifies ok against (tb, goal); throws PreconditionError
// otherwise. Every pass preserves verification and never increases the
// forest length. A goal whose antecedent is equivalent to bottom
// normalizes to the empty forest.
ProofForest normalize_forest(const ProofForest& f, const BasicTheory& tb,
                             const GradedImplication& goal,
                             const std::vector<NormalizePass>& passes);

}  // namespace quent

#endif
