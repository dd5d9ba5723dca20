#ifndef QUENT_VERIFY_HPP
#define QUENT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "quent/forest.hpp"
#include "quent/theory.hpp"

namespace quent {

struct Violation {
    int node;  // -1 for forest-level violations
    std::string tag;  // T1, T2, T3, T4, T4-A, T4-B, T4-C, T4-D, STRUCT
    std::string message;
};

struct VerificationReport {
    bool ok = false;
    Degree length;
    std::vector<Violation> violations;
};

struct VerifyOptions {
    // When set, these clause sets are used for T1/T2 instead of the
    // canonical standard clause sets; they must be Boolean equivalent to
    // the goal sides or verification fails with a STRUCT violation.
    std::optional<ClauseSet> antecedentSet;
    std::optional<ClauseSet> consequentSet;
};

// Checks the forest-proof conditions of f against the basic theory and the
// goal. If the antecedent's clause set is empty (antecedent equivalent to
// bottom) the forest is accepted unconditionally.
VerificationReport verify_forest(const ProofForest& f, const BasicTheory& tb,
                                 const GradedImplication& goal, const VerifyOptions& opts = {});

std::string render_report(const VerificationReport& r);

}  // namespace quent

#endif
