#include "quent/verify.hpp"

namespace quent {
namespace {

void checkT4(const ProofForest& f, const BasicTheory& tb, const ForestNode& n,
             VerificationReport& report) {
    const auto& kids = f.children(n.id);

    // all sibling edges must carry the same weight
    const Degree& c = f.node(kids.front()).inWeight;
    for (int k : kids)
        if (!(f.node(k).inWeight == c)) {
            report.violations.push_back(
                {n.id, "T4", "edge weights below the node differ"});
            return;
        }

    if (!n.justification) {
        report.violations.push_back({n.id, "T4", "non-terminal clause lacks a justification"});
        return;
    }

    auto childCovers = [&](const Clause& bound) {
        for (int k : kids) {
            const ForestNode& ch = f.node(k);
            if (!ch.improper && ch.clause.subsetOf(bound)) return true;
        }
        return false;
    };
    auto singleStarChild = [&]() {
        return kids.size() == 1 && f.node(kids.front()).improper;
    };

    if (const CaseA* a = std::get_if<CaseA>(&*n.justification)) {
        if (a->implIndex >= tb.size()) {
            report.violations.push_back(
                {n.id, "T4-A", "unknown implication index " + std::to_string(a->implIndex)});
            return;
        }
        const BasicImplication& imp = tb.implications[a->implIndex];
        if (!c.isZero())
            report.violations.push_back({n.id, "T4-A", "edge weight must be 0"});
        if (!imp.degree().isZero())
            report.violations.push_back({n.id, "T4-A", "cited implication degree must be 0"});
        if (!imp.antecedent().subsetOf(n.clause))
            report.violations.push_back(
                {n.id, "T4-A", "cited antecedent is not included in the node"});
        if (imp.consequent().isEmpty()) {
            if (!singleStarChild())
                report.violations.push_back(
                    {n.id, "T4-A", "bottom consequent requires the single child *"});
        } else {
            for (const auto& m : imp.consequent().clauses())
                if (!childCovers(m.unionWith(n.clause)))
                    report.violations.push_back(
                        {n.id, "T4-A", "no child inside " + m.str() + " union the node"});
        }
    } else if (const CaseB* b = std::get_if<CaseB>(&*n.justification)) {
        if (b->implIndex >= tb.size()) {
            report.violations.push_back(
                {n.id, "T4-B", "unknown implication index " + std::to_string(b->implIndex)});
            return;
        }
        const BasicImplication& imp = tb.implications[b->implIndex];
        if (imp.degree().isZero())
            report.violations.push_back({n.id, "T4-B", "cited implication degree must be > 0"});
        if (!(c == imp.degree()))
            report.violations.push_back(
                {n.id, "T4-B", "edge weight differs from the cited degree"});
        if (!imp.antecedent().subsetOf(n.clause))
            report.violations.push_back(
                {n.id, "T4-B", "cited antecedent is not included in the node"});
        if (imp.consequent().isEmpty()) {
            if (!singleStarChild())
                report.violations.push_back(
                    {n.id, "T4-B", "bottom consequent requires the single child *"});
        } else {
            for (const auto& m : imp.consequent().clauses())
                if (!childCovers(m))
                    report.violations.push_back(
                        {n.id, "T4-B", "no child inside " + m.str()});
        }
    } else if (std::get_if<CaseC>(&*n.justification)) {
        if (!c.isZero())
            report.violations.push_back({n.id, "T4-C", "edge weight must be 0"});
        if (n.clause.consistent())
            report.violations.push_back({n.id, "T4-C", "node is consistent"});
        if (!singleStarChild())
            report.violations.push_back({n.id, "T4-C", "* must be the only child"});
    } else if (const CaseD* d = std::get_if<CaseD>(&*n.justification)) {
        if (!c.isZero())
            report.violations.push_back({n.id, "T4-D", "edge weight must be 0"});
        if (kids.size() != 2) {
            report.violations.push_back({n.id, "T4-D", "exactly two children required"});
            return;
        }
        Literal pos(d->splitVar, true), neg(d->splitVar, false);
        auto fits = [&](const ForestNode& ch, const Literal& lit) {
            return !ch.improper && ch.clause.contains(lit) &&
                   ch.clause.withoutLiteral(lit).subsetOf(n.clause);
        };
        const ForestNode& c0 = f.node(kids[0]);
        const ForestNode& c1 = f.node(kids[1]);
        bool okSplit = (fits(c0, pos) && fits(c1, neg)) || (fits(c0, neg) && fits(c1, pos));
        if (!okSplit)
            report.violations.push_back(
                {n.id, "T4-D",
                 "children must be the split variable's two polarities over subsets of the node"});
    }
}

}  // namespace

VerificationReport verify_forest(const ProofForest& f, const BasicTheory& tb,
                                 const GradedImplication& goal, const VerifyOptions& opts) {
    VerificationReport report;
    report.length = forest_length(f);

    ClauseSet antSet, consSet;
    if (opts.antecedentSet) {
        antSet = *opts.antecedentSet;
        if (!boolean_equivalent(goal.antecedent, clause_set_formula(antSet))) {
            report.violations.push_back(
                {-1, "STRUCT", "supplied antecedent clause set is not equivalent to the goal antecedent"});
            report.ok = false;
            return report;
        }
    } else {
        antSet = standard_clause_set(goal.antecedent);
    }
    if (opts.consequentSet) {
        consSet = *opts.consequentSet;
        if (!boolean_equivalent(goal.consequent, clause_set_formula(consSet))) {
            report.violations.push_back(
                {-1, "STRUCT", "supplied consequent clause set is not equivalent to the goal consequent"});
            report.ok = false;
            return report;
        }
    } else {
        consSet = standard_clause_set(goal.consequent);
    }

    // Antecedent equivalent to bottom: any forest proves the implication.
    if (antSet.isEmpty()) {
        report.ok = true;
        return report;
    }

    // T1: every antecedent clause is covered by some root
    for (const auto& k : antSet.clauses()) {
        bool covered = false;
        for (int r : f.roots()) {
            const ForestNode& root = f.node(r);
            if (!root.improper && root.clause.subsetOf(k)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            report.violations.push_back({-1, "T1", "no root is a subset of " + k.str()});
    }

    // T2: every terminal clause includes a consequent clause
    for (const auto& n : f.nodes()) {
        if (n.improper || !f.isTerminal(n.id)) continue;
        bool covered = false;
        for (const auto& m : consSet.clauses())
            if (m.subsetOf(n.clause)) {
                covered = true;
                break;
            }
        if (!covered)
            report.violations.push_back(
                {n.id, "T2", "no consequent clause is a subset of the leaf"});
    }

    // T3
    if (report.length > goal.degree)
        report.violations.push_back(
            {-1, "T3", "forest length " + report.length.str() + " exceeds the goal degree " +
                           goal.degree.str()});

    // T4 per non-terminal clause; justifications are rejected on leaves and *
    for (const auto& n : f.nodes()) {
        if (n.improper) {
            if (n.justification)
                report.violations.push_back({n.id, "STRUCT", "* nodes carry no justification"});
            continue;
        }
        if (f.isTerminal(n.id)) {
            if (n.justification)
                report.violations.push_back(
                    {n.id, "STRUCT", "terminal nodes carry no justification"});
            continue;
        }
        checkT4(f, tb, n, report);
    }

    report.ok = report.violations.empty();
    return report;
}

std::string render_report(const VerificationReport& r) {
    std::string out = r.ok ? "ok" : "FAIL";
    out += " length=" + r.length.str() + "\n";
    for (const auto& v : r.violations) {
        out += "  [" + v.tag + "]";
        if (v.node >= 0) out += " node " + std::to_string(v.node);
        out += ": " + v.message + "\n";
    }
    return out;
}

}  // namespace quent
