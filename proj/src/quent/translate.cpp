#include "quent/translate.hpp"

#include <map>

#include "quent/errors.hpp"
#include "quent/forest_build.hpp"
#include "quent/verify.hpp"

namespace quent {
namespace {

// ---------------------------------------------------------------------------
// forest -> rule proof
// ---------------------------------------------------------------------------

struct ProofBuilder {
    const ProofForest& f;
    const BasicTheory& tb;
    Theory flat;
    Formula eta;
    RuleProof proof;
    std::map<int, std::pair<std::size_t, bool>> built;  // node -> (step, provesBottom)

    ProofBuilder(const ProofForest& forest, const BasicTheory& theory, Formula etaFormula)
        : f(forest), tb(theory), flat(flatten(theory)), eta(std::move(etaFormula)) {}

    std::size_t add(GradedImplication conclusion, RuleJustification just) {
        proof.steps.push_back({std::move(conclusion), std::move(just)});
        return proof.steps.size() - 1;
    }

    std::size_t axiom(std::size_t k) { return add(flat.implications[k], RAxiom{k}); }

    // proof of /\L ->[0] bottom for a node whose only child is *
    std::size_t bottomStep(const ForestNode& n) {
        Formula lf = clause_formula(n.clause);
        if (std::get_if<CaseC>(&*n.justification))
            return add({lf, Formula::bottom(), Degree::zero()}, R1{});
        std::size_t k = std::get_if<CaseA>(&*n.justification)
                            ? std::get_if<CaseA>(&*n.justification)->implIndex
                            : std::get_if<CaseB>(&*n.justification)->implIndex;
        std::size_t ax = axiom(k);
        Formula antf = clause_formula(tb.implications[k].antecedent());
        std::size_t capped = add({antf, Formula::bottom(), Degree::zero()}, R4{ax});
        std::size_t incl = add({lf, antf, Degree::zero()}, R1{});
        return add({lf, Formula::bottom(), Degree::zero()}, R6{incl, capped});
    }

    // /\L ->[c] \/_i /\L_i for the node's children, per its T4 case
    std::size_t stepImplication(const ForestNode& n, const std::vector<int>& kids,
                                const Formula& disjunction, const Degree& c) {
        Formula lf = clause_formula(n.clause);
        if (const CaseA* a = std::get_if<CaseA>(&*n.justification)) {
            std::size_t ax = axiom(a->implIndex);
            Formula antf = clause_formula(tb.implications[a->implIndex].antecedent());
            Formula beta = clause_set_formula(tb.implications[a->implIndex].consequent());
            Formula antAndL = Formula::conj(antf, lf);
            Formula betaAndL = Formula::conj(beta, lf);
            std::size_t widened = add({antAndL, betaAndL, Degree::zero()}, R2{ax, lf});
            std::size_t intro = add({lf, antAndL, Degree::zero()}, R1{});
            std::size_t joined = add({lf, betaAndL, Degree::zero()}, R6{intro, widened});
            std::size_t cover = add({betaAndL, disjunction, Degree::zero()}, R1{});
            return add({lf, disjunction, Degree::zero()}, R6{joined, cover});
        }
        if (const CaseB* b = std::get_if<CaseB>(&*n.justification)) {
            std::size_t ax = axiom(b->implIndex);
            Formula antf = clause_formula(tb.implications[b->implIndex].antecedent());
            Formula beta = clause_set_formula(tb.implications[b->implIndex].consequent());
            std::size_t intro = add({lf, antf, Degree::zero()}, R1{});
            std::size_t lifted = add({lf, beta, c}, R6{intro, ax});
            std::size_t cover = add({beta, disjunction, Degree::zero()}, R1{});
            return add({lf, disjunction, c}, R6{lifted, cover});
        }
        if (std::get_if<CaseD>(&*n.justification))
            return add({lf, disjunction, Degree::zero()}, R1{});
        (void)kids;
        throw PreconditionError("forest_to_rule_proof: unexpected case at an inner node");
    }

    // claim: step proving /\L ->[len] eta, or /\L ->[0] bottom when the whole
    // subtree ends in *
    struct Claim {
        std::size_t step;
        bool bottom;
        Degree len;
    };

    Claim liftBottomToEta(const Claim& c, const Formula& lf) {
        std::size_t absurd = add({Formula::bottom(), eta, Degree::zero()}, R1{});
        std::size_t step = add({lf, eta, Degree::zero()}, R6{c.step, absurd});
        return {step, false, Degree::zero()};
    }

    Claim build(int id) {
        auto hit = built.find(id);
        if (hit != built.end())
            return {hit->second.first, hit->second.second, builtLen.at(id)};
        Claim out = buildFresh(id);
        built[id] = {out.step, out.bottom};
        builtLen[id] = out.len;
        return out;
    }
    std::map<int, Degree> builtLen;

    Claim buildFresh(int id) {
        const ForestNode& n = f.node(id);
        Formula lf = clause_formula(n.clause);
        const auto& kids = f.children(id);
        if (kids.empty()) {
            std::size_t s = add({lf, eta, Degree::zero()}, R1{});
            return {s, false, Degree::zero()};
        }
        if (kids.size() == 1 && f.node(kids.front()).improper) {
            std::size_t s = bottomStep(n);
            return {s, true, Degree::zero()};
        }

        const Degree c = f.node(kids.front()).inWeight;
        std::vector<Claim> claims;
        std::vector<Formula> kidFormulas;
        for (int k : kids) {
            claims.push_back(build(k));
            kidFormulas.push_back(clause_formula(f.node(k).clause));
        }
        Formula disjunction = kidFormulas[0];
        for (std::size_t i = 1; i < kidFormulas.size(); ++i)
            disjunction = Formula::disj(disjunction, kidFormulas[i]);

        bool allBottom = true;
        for (const auto& cl : claims) allBottom = allBottom && cl.bottom;

        if (allBottom) {
            // assemble \/ /\L_i ->[0] bottom, pull it up through the step
            // implication, cap with R4
            std::size_t cur = claims[0].step;
            Formula curAnt = kidFormulas[0];
            for (std::size_t i = 1; i < claims.size(); ++i) {
                curAnt = Formula::disj(curAnt, kidFormulas[i]);
                cur = add({curAnt, Formula::bottom(), Degree::zero()}, R5{cur, claims[i].step});
            }
            std::size_t step = stepImplication(n, kids, disjunction, c);
            std::size_t through = add({lf, Formula::bottom(), c}, R6{step, cur});
            std::size_t capped = c.isZero() ? through
                                            : add({lf, Formula::bottom(), Degree::zero()},
                                                  R4{through});
            return {capped, true, Degree::zero()};
        }

        // bring every child to /\L_i ->[e] eta at the common degree e
        Degree e = Degree::zero();
        for (std::size_t i = 0; i < claims.size(); ++i) {
            if (claims[i].bottom) claims[i] = liftBottomToEta(claims[i], kidFormulas[i]);
            e = max(e, claims[i].len);
        }
        for (std::size_t i = 0; i < claims.size(); ++i) {
            if (claims[i].len == e) continue;
            std::size_t lifted = add({kidFormulas[i], eta, e}, R3{claims[i].step});
            claims[i] = {lifted, false, e};
        }
        std::size_t cur = claims[0].step;
        Formula curAnt = kidFormulas[0];
        for (std::size_t i = 1; i < claims.size(); ++i) {
            curAnt = Formula::disj(curAnt, kidFormulas[i]);
            cur = add({curAnt, eta, e}, R5{cur, claims[i].step});
        }
        std::size_t step = stepImplication(n, kids, disjunction, c);
        std::size_t total = add({lf, eta, c + e}, R6{step, cur});
        return {total, false, c + e};
    }
};

// ---------------------------------------------------------------------------
// rule proof -> forest
// ---------------------------------------------------------------------------

// Full case split on `missing` added below `clause`; leaves over
// clause + all polarity combinations.
void splitTree(MutableForest& w, std::optional<int> parent, const Degree& weight,
               const Clause& clause, const std::vector<Variable>& missing, std::size_t at) {
    if (at == missing.size()) {
        w.addNode(false, clause, parent, weight, std::nullopt);
        return;
    }
    int id = w.addNode(false, clause, parent, weight, CaseD{missing[at]});
    splitTree(w, id, Degree::zero(), clause.withLiteral(Literal(missing[at], true)), missing,
              at + 1);
    splitTree(w, id, Degree::zero(), clause.withLiteral(Literal(missing[at], false)), missing,
              at + 1);
}

MutableForest forestR1(const Formula& alpha, const Formula& beta) {
    MutableForest w;
    ClauseSet alphaSet = standard_clause_set(alpha);
    if (alphaSet.isEmpty()) {
        w.addNode(true, Clause(), std::nullopt, Degree::zero(), std::nullopt);
        return w;
    }
    std::set<Variable> betaVars = beta.variables();
    for (const auto& k : alphaSet.clauses()) {
        std::vector<Variable> missing;
        for (const auto& v : betaVars)
            if (!k.containsVariable(v)) missing.push_back(v);
        splitTree(w, std::nullopt, Degree::zero(), k, missing, 0);
    }
    return w;
}

// Adds one literal to the roots and propagates it through case A/D children.
void addLiteralEverywhere(MutableForest& w, const Literal& lit) {
    std::vector<int> queue = w.rootIds();
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto& n = w.nodes.at(queue[i]);
        if (n.star) continue;
        n.clause = n.clause.withLiteral(lit);
        if (!n.just) continue;
        bool propagate = std::get_if<CaseA>(&*n.just) || std::get_if<CaseD>(&*n.just);
        if (!propagate) continue;
        for (int c : w.childrenOf(queue[i]))
            if (!w.nodes.at(c).star) queue.push_back(c);
    }
}

MutableForest unionForests(const std::vector<const MutableForest*>& parts) {
    MutableForest out;
    for (const MutableForest* p : parts)
        for (int r : p->rootIds()) out.copySubtreeFrom(*p, r, std::nullopt, Degree::zero());
    return out;
}

MutableForest forestR2(const MutableForest& premise, const Formula& gamma) {
    ClauseSet gammaSet = standard_clause_set(gamma);
    MutableForest out;
    if (gammaSet.isEmpty()) {
        out.addNode(true, Clause(), std::nullopt, Degree::zero(), std::nullopt);
        return out;
    }
    std::vector<MutableForest> parts;
    for (const auto& c : gammaSet.clauses()) {
        MutableForest part = premise;
        prune_improper_pass(part);
        for (const auto& lit : c.literals()) addLiteralEverywhere(part, lit);
        cap_inconsistent_pass(part);
        parts.push_back(std::move(part));
    }
    std::vector<const MutableForest*> ptrs;
    for (const auto& p : parts) ptrs.push_back(&p);
    return unionForests(ptrs);
}

MutableForest forestAxiom(const BasicTheory& tb, std::size_t k) {
    MutableForest w;
    const BasicImplication& imp = tb.implications[k];
    Justification just = imp.degree().isZero() ? Justification(CaseA{k}) : Justification(CaseB{k});
    int root = w.addNode(false, imp.antecedent(), std::nullopt, Degree::zero(), just);
    if (imp.consequent().isEmpty()) {
        w.addNode(true, Clause(), root, imp.degree(), std::nullopt);
    } else {
        for (const auto& m : imp.consequent().clauses())
            w.addNode(false, m, root, imp.degree(), std::nullopt);
    }
    return w;
}

MutableForest forestR6(const MutableForest& first, const MutableForest& second,
                       const Formula& beta) {
    ClauseSet betaSet = standard_clause_set(beta);
    if (betaSet.isEmpty()) return first;  // no proper leaves in the first forest

    MutableForest out = first;
    prune_improper_pass(out);
    cap_inconsistent_pass(out);
    MutableForest graft = second;
    prune_improper_pass(graft);
    cap_inconsistent_pass(graft);

    for (int id : out.ids()) {
        auto it = out.nodes.find(id);
        if (it == out.nodes.end() || it->second.star || !out.terminal(id)) continue;
        const Clause& leaf = it->second.clause;
        const Clause* m = nullptr;
        for (const auto& cand : betaSet.clauses())
            if (cand.subsetOf(leaf)) {
                m = &cand;
                break;
            }
        if (!m) throw PreconditionError("rule_proof_to_forest: leaf not covered by the middle formula");
        int src = -1;
        for (int r : graft.rootIds())
            if (!graft.nodes.at(r).star && graft.nodes.at(r).clause.subsetOf(*m)) {
                src = r;
                break;
            }
        if (src < 0)
            throw PreconditionError("rule_proof_to_forest: no root covers the middle clause");
        it->second.just = graft.nodes.at(src).just;
        for (int c : graft.childrenOf(src))
            out.copySubtreeFrom(graft, c, id, graft.nodes.at(c).w);
    }
    return out;
}

}  // namespace

RuleProof forest_to_rule_proof(const ProofForest& f, const BasicTheory& tb,
                               const GradedImplication& goal) {
    VerificationReport check = verify_forest(f, tb, goal);
    if (!check.ok) throw PreconditionError("forest_to_rule_proof: forest does not verify");
    for (const auto& n : f.nodes()) {
        if (!n.improper) continue;
        if (!f.isTerminal(n.id) || (n.parent && f.children(*n.parent).size() > 1))
            throw PreconditionError(
                "forest_to_rule_proof: normalize with prune-improper first");
    }

    ProofBuilder b(f, tb, goal.consequent);
    ClauseSet antSet = standard_clause_set(goal.antecedent);

    if (antSet.isEmpty()) {
        std::size_t s = b.add({goal.antecedent, goal.consequent, Degree::zero()}, R1{});
        if (!goal.degree.isZero()) b.add({goal.antecedent, goal.consequent, goal.degree}, R3{s});
        return b.proof;
    }

    std::vector<std::size_t> steps;
    std::vector<Formula> antFormulas;
    Degree top = Degree::zero();
    struct Part {
        std::size_t step;
        Degree len;
    };
    std::vector<Part> parts;
    for (const auto& k : antSet.clauses()) {
        int rootId = -1;
        for (int r : f.roots()) {
            const ForestNode& root = f.node(r);
            if (!root.improper && root.clause.subsetOf(k)) {
                rootId = r;
                break;
            }
        }
        if (rootId < 0) throw PreconditionError("forest_to_rule_proof: uncovered antecedent clause");
        ProofBuilder::Claim claim = b.build(rootId);
        Formula kf = clause_formula(k);
        Formula rootFormula = clause_formula(f.node(rootId).clause);
        if (claim.bottom) claim = b.liftBottomToEta(claim, rootFormula);
        std::size_t step = claim.step;
        if (!(f.node(rootId).clause == k)) {
            std::size_t incl = b.add({kf, rootFormula, Degree::zero()}, R1{});
            step = b.add({kf, goal.consequent, claim.len}, R6{incl, step});
        }
        parts.push_back({step, claim.len});
        antFormulas.push_back(kf);
        top = max(top, claim.len);
    }
    for (auto& part : parts)
        if (!(part.len == top)) {
            // index of this part's antecedent formula
            std::size_t i = &part - parts.data();
            part.step = b.add({antFormulas[i], goal.consequent, top}, R3{part.step});
            part.len = top;
        }
    std::size_t cur = parts[0].step;
    Formula curAnt = antFormulas[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        curAnt = Formula::disj(curAnt, antFormulas[i]);
        cur = b.add({curAnt, goal.consequent, top}, R5{cur, parts[i].step});
    }
    if (!(goal.antecedent == curAnt)) {
        std::size_t incl = b.add({goal.antecedent, curAnt, Degree::zero()}, R1{});
        cur = b.add({goal.antecedent, goal.consequent, top}, R6{incl, cur});
    }
    if (!(top == goal.degree))
        cur = b.add({goal.antecedent, goal.consequent, goal.degree}, R3{cur});
    return b.proof;
}

ProofForest rule_proof_to_forest(const RuleProof& p, const BasicTheory& tb) {
    Theory flat = flatten(tb);
    ProofReport report = check_rule_proof(p, flat);
    if (!report.ok) throw PreconditionError("rule_proof_to_forest: proof does not check");

    std::vector<MutableForest> forests(p.steps.size());
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const RuleStep& s = p.steps[i];
        if (const RAxiom* ax = std::get_if<RAxiom>(&s.justification)) {
            forests[i] = forestAxiom(tb, ax->theoryIndex);
        } else if (std::get_if<R1>(&s.justification)) {
            forests[i] = forestR1(s.conclusion.antecedent, s.conclusion.consequent);
        } else if (const R2* r = std::get_if<R2>(&s.justification)) {
            forests[i] = forestR2(forests[r->premise], r->gamma);
        } else if (const R3* r = std::get_if<R3>(&s.justification)) {
            forests[i] = forests[r->premise];
        } else if (const R4* r = std::get_if<R4>(&s.justification)) {
            forests[i] = forests[r->premise];
        } else if (const R5* r = std::get_if<R5>(&s.justification)) {
            std::vector<const MutableForest*> parts{&forests[r->premise1], &forests[r->premise2]};
            forests[i] = unionForests(parts);
        } else if (const R6* r = std::get_if<R6>(&s.justification)) {
            forests[i] = forestR6(forests[r->premise1], forests[r->premise2],
                                  p.steps[r->premise1].conclusion.consequent);
        }
    }
    return forests.back().freeze();
}

}  // namespace quent
