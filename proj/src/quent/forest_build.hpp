#ifndef QUENT_FOREST_BUILD_HPP
#define QUENT_FOREST_BUILD_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "quent/forest.hpp"

namespace quent {

// Mutable working copy of a forest for the normalization and translation
// surgery. Children are recomputed on demand, which keeps the operations
// simple (forests stay small).
struct MutableForest {
    struct Node {
        int id;
        bool star = false;
        Clause clause;
        std::optional<int> parent;
        Degree w;
        std::optional<Justification> just;
    };

    std::map<int, Node> nodes;
    int next = 0;

    MutableForest() = default;
    explicit MutableForest(const ProofForest& f) {
        for (const auto& n : f.nodes()) {
            nodes[n.id] = {n.id, n.improper, n.clause, n.parent, n.inWeight, n.justification};
            next = std::max(next, n.id + 1);
        }
    }

    ProofForest freeze() const {
        std::vector<ForestNode> out;
        out.reserve(nodes.size());
        for (const auto& [id, n] : nodes)
            out.push_back({id, n.star, n.clause, n.parent, n.w, n.just});
        return ProofForest(std::move(out));
    }

    std::vector<int> ids() const {
        std::vector<int> out;
        for (const auto& [id, n] : nodes) out.push_back(id);
        return out;
    }

    std::vector<int> childrenOf(int id) const {
        std::vector<int> out;
        for (const auto& [cid, n] : nodes)
            if (n.parent && *n.parent == id) out.push_back(cid);
        return out;
    }

    std::vector<int> rootIds() const {
        std::vector<int> out;
        for (const auto& [id, n] : nodes)
            if (!n.parent) out.push_back(id);
        return out;
    }

    bool terminal(int id) const { return childrenOf(id).empty(); }

    void removeDescendants(int id) {
        for (int c : childrenOf(id)) removeSubtree(c);
    }

    void removeSubtree(int id) {
        removeDescendants(id);
        nodes.erase(id);
    }

    int addNode(bool star, Clause clause, std::optional<int> parent, Degree w,
                std::optional<Justification> just) {
        int id = next++;
        nodes[id] = {id, star, std::move(clause), parent, std::move(w), std::move(just)};
        return id;
    }

    // Deep-copies the subtree of src rooted at srcId into *this.
    int copySubtreeFrom(const MutableForest& src, int srcId, std::optional<int> parent,
                        const Degree& w) {
        const Node& s = src.nodes.at(srcId);
        int id = addNode(s.star, s.clause, parent, w, s.just);
        for (int c : src.childrenOf(srcId)) copySubtreeFrom(src, c, id, src.nodes.at(c).w);
        return id;
    }
};

// Does the node's case-D justification still match its two children?
inline bool d_split_fits(const MutableForest& w, int id) {
    const auto& n = w.nodes.at(id);
    const CaseD* d = n.just ? std::get_if<CaseD>(&*n.just) : nullptr;
    if (!d) return false;
    auto kids = w.childrenOf(id);
    if (kids.size() != 2) return false;
    Literal pos(d->splitVar, true), neg(d->splitVar, false);
    auto fits = [&](int cid, const Literal& lit) {
        const auto& ch = w.nodes.at(cid);
        return !ch.star && ch.clause.contains(lit) &&
               ch.clause.withoutLiteral(lit).subsetOf(n.clause);
    };
    return (fits(kids[0], pos) && fits(kids[1], neg)) ||
           (fits(kids[0], neg) && fits(kids[1], pos));
}

// Parent adopts the node's children and justification; the node goes away.
inline void bypass_onto(MutableForest& w, int parentId, int nodeId) {
    auto& parent = w.nodes.at(parentId);
    auto& node = w.nodes.at(nodeId);
    parent.just = node.just;
    for (int c : w.childrenOf(nodeId)) w.nodes.at(c).parent = parentId;
    w.nodes.erase(nodeId);
}

// Every * node terminal and sibling-free (delete subtrees below non-terminal
// *, and * children that have proper siblings).
inline void prune_improper_pass(MutableForest& w) {
    for (int id : w.ids()) {
        auto it = w.nodes.find(id);
        if (it == w.nodes.end() || !it->second.star) continue;
        w.removeDescendants(id);
    }
    for (int id : w.ids()) {
        auto it = w.nodes.find(id);
        if (it == w.nodes.end() || it->second.star) continue;
        auto kids = w.childrenOf(id);
        if (kids.size() < 2) continue;
        for (int c : kids)
            if (w.nodes.at(c).star) w.removeSubtree(c);
    }
}

// Every inconsistent clause becomes non-terminal with the single child *.
inline void cap_inconsistent_pass(MutableForest& w) {
    for (int id : w.ids()) {
        auto it = w.nodes.find(id);
        if (it == w.nodes.end() || it->second.star || it->second.clause.consistent()) continue;
        auto kids = w.childrenOf(id);
        if (kids.size() == 1 && w.nodes.at(kids[0]).star) continue;  // already capped
        w.removeDescendants(id);
        it->second.just = CaseC{};
        w.addNode(true, Clause(), id, Degree::zero(), std::nullopt);
    }
}

}  // namespace quent

#endif
