#include "quent/normalize.hpp"

#include <algorithm>
#include <map>

#include "quent/errors.hpp"
#include "quent/forest_build.hpp"
#include "quent/verify.hpp"

namespace quent {
namespace {

// No case-D node splits on a variable it already contains: replace its
// descendants by the included child's subtree.
void freshSplits(MutableForest& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int id : w.ids()) {
            auto it = w.nodes.find(id);
            if (it == w.nodes.end() || it->second.star || !it->second.just) continue;
            const CaseD* d = std::get_if<CaseD>(&*it->second.just);
            if (!d || !it->second.clause.containsVariable(d->splitVar)) continue;
            auto kids = w.childrenOf(id);
            int included = -1;
            for (int c : kids)
                if (!w.nodes.at(c).star && w.nodes.at(c).clause.subsetOf(it->second.clause)) {
                    included = c;
                    break;
                }
            if (included < 0)
                throw PreconditionError("fresh-splits: malformed case-D node " + std::to_string(id));
            for (int c : kids)
                if (c != included) w.removeSubtree(c);
            bypass_onto(w, id, included);
            changed = true;
            break;
        }
    }
}

const Clause* firstCovering(const ClauseSet& set, const Clause& clause) {
    for (const auto& m : set.clauses())
        if (m.subsetOf(clause)) return &m;
    return nullptr;
}

// Shrink a leaf to its covering consequent clause and repair case-D
// ancestors whose split literal disappeared.
void shrinkLeafAndRepair(MutableForest& w, int leafId, const ClauseSet& consSet) {
    int cur = leafId;
    {
        auto& n = w.nodes.at(cur);
        const Clause* m = firstCovering(consSet, n.clause);
        if (!m) throw PreconditionError("standard-ends: leaf not covered by the consequent");
        n.clause = *m;
        n.just = std::nullopt;
    }
    while (true) {
        auto& n = w.nodes.at(cur);
        if (!n.parent) return;
        int pid = *n.parent;
        auto& p = w.nodes.at(pid);
        if (!p.just || !std::get_if<CaseD>(&*p.just) || d_split_fits(w, pid)) return;
        w.removeDescendants(pid);
        const Clause* m = firstCovering(consSet, p.clause);
        if (!m) throw PreconditionError("standard-ends: repaired node not covered");
        p.clause = *m;
        p.just = std::nullopt;
        cur = pid;
    }
}

// Roots become exactly the antecedent's standard clauses (grafting the
// covering trees); leaves shrink to consequent standard clauses.
MutableForest standardEnds(const MutableForest& w, const ClauseSet& antSet, const ClauseSet& consSet) {
    MutableForest out;
    for (const auto& k : antSet.clauses()) {
        int src = -1;
        for (int r : w.rootIds()) {
            const auto& root = w.nodes.at(r);
            if (!root.star && root.clause.subsetOf(k)) {
                src = r;
                break;
            }
        }
        if (src < 0) throw PreconditionError("standard-ends: uncovered antecedent clause");
        int nid = out.copySubtreeFrom(w, src, std::nullopt, Degree::zero());
        out.nodes.at(nid).clause = k;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int id : out.ids()) {
            auto it = out.nodes.find(id);
            if (it == out.nodes.end() || it->second.star || !out.terminal(id)) continue;
            const Clause* m = firstCovering(consSet, it->second.clause);
            if (!m) throw PreconditionError("standard-ends: leaf not covered by the consequent");
            if (*m == it->second.clause) continue;
            shrinkLeafAndRepair(out, id, consSet);
            changed = true;
            break;
        }
    }
    return out;
}

bool literalUnused(const MutableForest& w, const BasicTheory& tb, int id, const Literal& lit) {
    const auto& n = w.nodes.at(id);
    Clause shrunk = n.clause.withoutLiteral(lit);
    if (const CaseA* a = std::get_if<CaseA>(&*n.just)) {
        const BasicImplication& imp = tb.implications[a->implIndex];
        if (imp.antecedent().contains(lit)) return false;
        for (const auto& m : imp.consequent().clauses()) {
            bool covered = false;
            for (int c : w.childrenOf(id)) {
                const auto& ch = w.nodes.at(c);
                if (!ch.star && ch.clause.subsetOf(m.unionWith(shrunk))) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }
    if (const CaseB* b = std::get_if<CaseB>(&*n.just))
        return !tb.implications[b->implIndex].antecedent().contains(lit);
    if (std::get_if<CaseC>(&*n.just)) return !shrunk.consistent();
    if (std::get_if<CaseD>(&*n.just)) {
        for (int c : w.childrenOf(id))
            if (!w.nodes.at(c).star && w.nodes.at(c).clause.contains(lit)) return false;
        return true;
    }
    return false;
}

// Iterated removal of unused literals, with the case-D father bypass.
void dropUnused(MutableForest& w, const BasicTheory& tb) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int id : w.ids()) {
            auto it = w.nodes.find(id);
            if (it == w.nodes.end() || it->second.star || !it->second.just || w.terminal(id))
                continue;
            const Literal* found = nullptr;
            for (const auto& lit : it->second.clause.literals())
                if (literalUnused(w, tb, id, lit)) {
                    found = &lit;
                    break;
                }
            if (!found) continue;
            it->second.clause = it->second.clause.withoutLiteral(*found);
            if (it->second.parent) {
                int pid = *it->second.parent;
                auto& p = w.nodes.at(pid);
                if (p.just && std::get_if<CaseD>(&*p.just) && !d_split_fits(w, pid)) {
                    for (int c : w.childrenOf(pid))
                        if (c != id) w.removeSubtree(c);
                    bypass_onto(w, pid, id);
                }
            }
            changed = true;
            break;
        }
    }
}

bool clauseHasLiteral(const MutableForest& w, const Literal& lit) {
    for (const auto& [id, n] : w.nodes)
        if (!n.star && n.clause.contains(lit)) return true;
    return false;
}

int nodeDepth(const MutableForest& w, int id) {
    int depth = 0;
    const auto* n = &w.nodes.at(id);
    while (n->parent) {
        n = &w.nodes.at(*n->parent);
        ++depth;
    }
    return depth;
}

// One elimination step of the fresh-polarity purge: rewrites the deepest
// introduction of `lit` so the literal no longer occurs below it.
void purgeStep(MutableForest& w, const Literal& lit) {
    // deepest introduction: a clause without lit that has a child with lit,
    // none of whose descendants also introduces lit
    int best = -1, bestDepth = -1;
    for (const auto& [id, n] : w.nodes) {
        if (n.star || n.clause.contains(lit)) continue;
        bool introduces = false;
        for (int c : w.childrenOf(id)) {
            const auto& ch = w.nodes.at(c);
            if (!ch.star && ch.clause.contains(lit)) introduces = true;
        }
        if (!introduces) continue;
        int depth = nodeDepth(w, id);
        if (depth > bestDepth || (depth == bestDepth && id < best)) {
            best = id;
            bestDepth = depth;
        }
    }
    if (best < 0) throw PreconditionError("purge-polarity: no introduction found");

    auto& L = w.nodes.at(best);
    const CaseD* d = L.just ? std::get_if<CaseD>(&*L.just) : nullptr;
    if (!d || !(d->splitVar == lit.var))
        throw PreconditionError("purge-polarity: introduction is not a split on the variable");
    auto kids = w.childrenOf(best);
    int withLit = -1, without = -1;
    for (int c : kids)
        (w.nodes.at(c).clause.contains(lit) ? withLit : without) = c;
    if (withLit < 0 || without < 0)
        throw PreconditionError("purge-polarity: malformed split children");

    // maximal subtree of clauses containing lit, rooted at the lit child
    std::vector<int> subtree{withLit};
    std::vector<int> leaves;
    for (std::size_t i = 0; i < subtree.size(); ++i) {
        bool hasLitChild = false;
        for (int c : w.childrenOf(subtree[i])) {
            const auto& ch = w.nodes.at(c);
            if (!ch.star && ch.clause.contains(lit)) {
                subtree.push_back(c);
                hasLitChild = true;
            }
        }
        if (!hasLitChild) leaves.push_back(subtree[i]);
    }

    const Clause base = L.clause;
    for (int id : subtree) {
        auto& n = w.nodes.at(id);
        n.clause = n.clause.withoutLiteral(lit).unionWith(base);
    }
    // subtree leaves were minimal inconsistent pairs; they take over the
    // removed sibling's role
    const auto& other = w.nodes.at(without);
    for (int id : leaves) {
        if (id == withLit) throw PreconditionError("purge-polarity: split child drops the literal");
        auto& p = w.nodes.at(id);
        if (!other.clause.subsetOf(p.clause))
            throw PreconditionError("purge-polarity: rewritten leaf misses the sibling clause");
        w.removeDescendants(id);
        p.just = other.just;
        for (int c : w.childrenOf(without)) w.copySubtreeFrom(w, c, id, w.nodes.at(c).w);
    }
    // merge the rewritten child into L and drop the sibling subtree
    w.removeSubtree(without);
    bypass_onto(w, best, withLit);
}

// cap + fresh-splits + standard-ends + drop-unused, iterated to a joint
// fixpoint so the purge pass is idempotent.
void prerequisiteFixpoint(MutableForest& w, const BasicTheory& tb, const ClauseSet& antSet,
                          const ClauseSet& consSet) {
    std::string last;
    for (int i = 0; i < 100; ++i) {
        cap_inconsistent_pass(w);
        freshSplits(w);
        w = standardEnds(w, antSet, consSet);
        dropUnused(w, tb);
        std::string now = render_forest(w.freeze());
        if (now == last) return;
        last = std::move(now);
    }
    throw BudgetError("purge-polarity: prerequisite passes did not stabilize");
}

void purgePolarity(MutableForest& w, const BasicTheory& tb, const ClauseSet& antSet,
                   const ClauseSet& consSet, const Literal& lit) {
    std::size_t guard = 0;
    const std::size_t limit = 10000;  // defensive bound; each step removes one introduction
    while (true) {
        prerequisiteFixpoint(w, tb, antSet, consSet);
        if (!clauseHasLiteral(w, lit)) return;
        if (++guard > limit) throw BudgetError("purge-polarity: did not converge");
        purgeStep(w, lit);
        dropUnused(w, tb);
    }
}

bool polarityOccursInTheory(const BasicTheory& tb, const Literal& lit) {
    for (const auto& imp : tb.implications) {
        if (imp.antecedent().contains(lit)) return true;
        for (const auto& m : imp.consequent().clauses())
            if (m.contains(lit)) return true;
    }
    return false;
}

}  // namespace

std::optional<NormalizePass> NormalizePass::parse(const std::string& tag) {
    NormalizePass p;
    if (tag == "prune-improper") {
        p.kind = Kind::PruneImproper;
    } else if (tag == "cap-inconsistent") {
        p.kind = Kind::CapInconsistent;
    } else if (tag == "fresh-splits") {
        p.kind = Kind::FreshSplits;
    } else if (tag == "standard-ends") {
        p.kind = Kind::StandardEnds;
    } else if (tag == "drop-unused") {
        p.kind = Kind::DropUnused;
    } else if (tag.rfind("purge-polarity:", 0) == 0) {
        std::string rest = tag.substr(15);
        auto colon = rest.find(':');
        if (colon == std::string::npos || colon == 0) return std::nullopt;
        std::string pol = rest.substr(colon + 1);
        if (pol != "+" && pol != "-") return std::nullopt;
        p.kind = Kind::PurgePolarity;
        p.var = Variable{rest.substr(0, colon)};
        p.positive = pol == "+";
    } else {
        return std::nullopt;
    }
    return p;
}

std::string NormalizePass::str() const {
    switch (kind) {
        case Kind::PruneImproper:
            return "prune-improper";
        case Kind::CapInconsistent:
            return "cap-inconsistent";
        case Kind::FreshSplits:
            return "fresh-splits";
        case Kind::StandardEnds:
            return "standard-ends";
        case Kind::DropUnused:
            return "drop-unused";
        case Kind::PurgePolarity:
            return "purge-polarity:" + var.name + ":" + (positive ? "+" : "-");
    }
    return "";
}

std::vector<NormalizePass> default_normalize_passes() {
    using K = NormalizePass::Kind;
    std::vector<NormalizePass> out;
    for (K k : {K::PruneImproper, K::CapInconsistent, K::FreshSplits, K::StandardEnds, K::DropUnused}) {
        NormalizePass p;
        p.kind = k;
        out.push_back(p);
    }
    return out;
}

ProofForest normalize_forest(const ProofForest& f, const BasicTheory& tb,
                             const GradedImplication& goal,
                             const std::vector<NormalizePass>& passes) {
    VerificationReport before = verify_forest(f, tb, goal);
    if (!before.ok)
        throw PreconditionError("normalize_forest: input forest does not verify");

    ClauseSet antSet = standard_clause_set(goal.antecedent);
    ClauseSet consSet = standard_clause_set(goal.consequent);
    // Antecedent equivalent to bottom: the canonical normal proof is empty.
    if (antSet.isEmpty()) return ProofForest();

    MutableForest w(f);
    for (const auto& pass : passes) {
        switch (pass.kind) {
            case NormalizePass::Kind::PruneImproper:
                prune_improper_pass(w);
                break;
            case NormalizePass::Kind::CapInconsistent:
                cap_inconsistent_pass(w);
                break;
            case NormalizePass::Kind::FreshSplits:
                freshSplits(w);
                break;
            case NormalizePass::Kind::StandardEnds:
                w = standardEnds(w, antSet, consSet);
                break;
            case NormalizePass::Kind::DropUnused:
                dropUnused(w, tb);
                break;
            case NormalizePass::Kind::PurgePolarity: {
                Literal lit(pass.var, pass.positive);
                PolarityOccurrence pa = polarity_of(goal.antecedent, pass.var);
                PolarityOccurrence pc = polarity_of(goal.consequent, pass.var);
                bool inGoal = pass.positive ? (pa.positive || pc.positive)
                                            : (pa.negative || pc.negative);
                if (inGoal || polarityOccursInTheory(tb, lit))
                    throw PreconditionError(
                        "purge-polarity: the polarity occurs in the goal or the theory");
                purgePolarity(w, tb, antSet, consSet, lit);
                break;
            }
        }
    }
    return w.freeze();
}

}  // namespace quent
