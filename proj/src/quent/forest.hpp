#ifndef QUENT_FOREST_HPP
#define QUENT_FOREST_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quent/degree.hpp"
#include "quent/formula.hpp"
#include "quent/theory.hpp"

namespace quent {

// T4 justification witness stored on non-terminal proper nodes.
struct CaseA {
    std::size_t implIndex;
    bool operator==(const CaseA&) const = default;
};
struct CaseB {
    std::size_t implIndex;
    bool operator==(const CaseB&) const = default;
};
struct CaseC {
    bool operator==(const CaseC&) const = default;
};
struct CaseD {
    Variable splitVar;
    bool operator==(const CaseD&) const = default;
};
using Justification = std::variant<CaseA, CaseB, CaseC, CaseD>;

struct ForestNode {
    int id = 0;
    bool improper = false;  // the * node; carries no clause and no justification
    Clause clause;
    std::optional<int> parent;
    Degree inWeight;  // weight of the edge from the parent; 0 and unused for roots
    std::optional<Justification> justification;
};

// Weighted directed forest of clause-or-* nodes. Construction validates the
// structural invariants (unique ids, existing parents, acyclicity); the
// proof-forest conditions T1-T4 are checked by verify_forest.
class ProofForest {
public:
    ProofForest() = default;
    explicit ProofForest(std::vector<ForestNode> nodes);

    const std::vector<ForestNode>& nodes() const { return nodes_; }
    bool empty() const { return nodes_.empty(); }
    std::size_t size() const { return nodes_.size(); }

    const ForestNode& node(int id) const { return nodes_[index_.at(id)]; }
    bool hasNode(int id) const { return index_.count(id) != 0; }
    const std::vector<int>& children(int id) const { return children_.at(id); }
    bool isTerminal(int id) const { return children(id).empty(); }
    const std::vector<int>& roots() const { return roots_; }

    int maxId() const;

private:
    std::vector<ForestNode> nodes_;           // sorted by id
    std::map<int, std::size_t> index_;        // id -> position
    std::map<int, std::vector<int>> children_;  // id -> child ids ascending
    std::vector<int> roots_;
};

// Max over branches of the branch weight sum; a branch containing * counts 0.
Degree forest_length(const ProofForest& f);

// Multiset-style view of which T4 cases justify nodes, for reporting.
struct JustificationCounts {
    std::size_t caseA = 0, caseB = 0, caseC = 0, caseD = 0;
};
JustificationCounts count_justifications(const ProofForest& f);

// Forest file: optional "goal:" header, optional "bzeta:"/"beta:" clause-set
// headers, then one "node ..." line per node.
struct ForestFile {
    ProofForest forest;
    std::optional<GradedImplication> goal;
    std::optional<ClauseSet> suppliedAntecedentSet;
    std::optional<ClauseSet> suppliedConsequentSet;
};

ForestFile parse_forest(const std::string& text);
std::string render_forest(const ProofForest& f, const GradedImplication* goal = nullptr);

}  // namespace quent

#endif
