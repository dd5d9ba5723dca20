#include "quent/prove.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quent/errors.hpp"

namespace quent {
namespace {

// Clause over an indexed variable universe as a pair of bitmasks.
struct Mask {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;

    bool consistent() const { return (pos & neg) == 0; }
    bool subsetOf(const Mask& o) const { return (pos & ~o.pos) == 0 && (neg & ~o.neg) == 0; }
    Mask unionWith(const Mask& o) const { return {pos | o.pos, neg | o.neg}; }
    bool has(std::size_t v) const { return ((pos | neg) >> v) & 1; }
};

struct Universe {
    std::vector<Variable> vars;
    std::map<Variable, std::size_t> index;
    std::vector<std::size_t> pow3;

    explicit Universe(const std::set<Variable>& vs) {
        vars.assign(vs.begin(), vs.end());
        if (vars.size() > 20)
            throw BudgetError("entailment_degree: too many variables for the clause lattice");
        for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
        pow3.resize(vars.size() + 1);
        pow3[0] = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) pow3[i + 1] = pow3[i] * 3;
    }

    std::size_t size() const { return vars.size(); }
    std::size_t states() const { return pow3[vars.size()]; }

    Mask maskOf(const Clause& c) const {
        Mask m;
        for (const auto& l : c.literals()) {
            std::size_t v = index.at(l.var);
            (l.positive ? m.pos : m.neg) |= std::uint32_t{1} << v;
        }
        return m;
    }

    Clause clauseOf(const Mask& m) const {
        std::vector<Literal> lits;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if ((m.pos >> v) & 1) lits.emplace_back(vars[v], true);
            if ((m.neg >> v) & 1) lits.emplace_back(vars[v], false);
        }
        return Clause(std::move(lits));
    }

    // base-3 state index of a consistent clause
    std::size_t stateOf(const Mask& m) const {
        std::size_t s = 0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            std::size_t digit = (m.pos >> v) & 1 ? 1 : ((m.neg >> v) & 1 ? 2 : 0);
            s += digit * pow3[v];
        }
        return s;
    }

    Mask maskOfState(std::size_t s) const {
        Mask m;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            switch (s % 3) {
                case 1:
                    m.pos |= std::uint32_t{1} << v;
                    break;
                case 2:
                    m.neg |= std::uint32_t{1} << v;
                    break;
            }
            s /= 3;
        }
        return m;
    }
};

using Value = std::optional<Degree>;  // nullopt = no proof tree

bool less(const Value& a, const Value& b) {
    if (!b) return a.has_value();
    if (!a) return false;
    return *a < *b;
}

struct ImplData {
    Mask ant;
    std::vector<Mask> cons;
    Degree degree;
    bool bottom() const { return cons.empty(); }
};

struct Transition {
    enum class Kind { Leaf, BottomImpl, A, B, D } kind = Kind::Leaf;
    std::size_t impl = 0;
    std::size_t var = 0;
};

struct Engine {
    const BasicTheory& tb;
    Universe u;
    std::vector<ImplData> impls;
    std::vector<Mask> etaClauses;  // canonical standard clause set for eta
    std::vector<Value> cost;

    Engine(const BasicTheory& theory, const Formula& zeta, const Formula& eta,
           const ProveOptions& opts)
        : tb(theory), u(gatherVars(theory, zeta, eta)) {
        if (u.states() > opts.stateBudget)
            throw BudgetError("entailment_degree: clause lattice exceeds the state budget");
        for (const auto& b : tb.implications) {
            ImplData d;
            d.ant = u.maskOf(b.antecedent());
            for (const auto& m : b.consequent().clauses()) d.cons.push_back(u.maskOf(m));
            d.degree = b.degree();
            impls.push_back(std::move(d));
        }
        ClauseSet etaSet = standard_clause_set(eta);
        for (const auto& m : etaSet.clauses()) etaClauses.push_back(u.maskOf(m));
    }

    static std::set<Variable> gatherVars(const BasicTheory& tb, const Formula& zeta,
                                         const Formula& eta) {
        std::set<Variable> vs = tb.variables();
        auto a = zeta.variables();
        auto b = eta.variables();
        vs.insert(a.begin(), a.end());
        vs.insert(b.begin(), b.end());
        return vs;
    }

    bool coveredByEta(const Mask& m) const {
        for (const auto& e : etaClauses)
            if (e.subsetOf(m)) return true;
        return false;
    }

    // value of a clause, treating inconsistent clauses as 0 (case C)
    Value valueOf(const Mask& m) const {
        if (!m.consistent()) return Degree::zero();
        return cost[u.stateOf(m)];
    }

    Value candidateA(const Mask& L, const ImplData& d) const {
        Degree best = Degree::zero();
        for (const auto& mi : d.cons) {
            Value v = valueOf(mi.unionWith(L));
            if (!v) return std::nullopt;
            best = max(best, *v);
        }
        return best;
    }

    Value candidateB(const ImplData& d) const {
        Degree best = Degree::zero();
        for (const auto& mi : d.cons) {
            Value v = valueOf(mi);
            if (!v) return std::nullopt;
            best = max(best, *v);
        }
        return d.degree + best;
    }

    Value candidateD(const Mask& L, std::size_t var) const {
        Mask withPos = L, withNeg = L;
        withPos.pos |= std::uint32_t{1} << var;
        withNeg.neg |= std::uint32_t{1} << var;
        Value a = valueOf(withPos);
        Value b = valueOf(withNeg);
        if (!a || !b) return std::nullopt;
        return max(*a, *b);
    }

    void iterate() {
        cost.assign(u.states(), std::nullopt);
        for (std::size_t s = 0; s < u.states(); ++s) {
            Mask L = u.maskOfState(s);
            if (coveredByEta(L)) {
                cost[s] = Degree::zero();
                continue;
            }
            for (const auto& d : impls)
                if (d.bottom() && d.ant.subsetOf(L)) {
                    cost[s] = Degree::zero();
                    break;
                }
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < u.states(); ++s) {
                Mask L = u.maskOfState(s);
                Value best = cost[s];
                for (const auto& d : impls) {
                    if (d.bottom() || !d.ant.subsetOf(L)) continue;
                    Value cand = d.degree.isZero() ? candidateA(L, d) : candidateB(d);
                    if (less(cand, best)) best = cand;
                }
                for (std::size_t v = 0; v < u.size(); ++v) {
                    if (L.has(v)) continue;
                    Value cand = candidateD(L, v);
                    if (less(cand, best)) best = cand;
                }
                if (less(best, cost[s])) {
                    cost[s] = best;
                    changed = true;
                }
            }
        }
    }

    // Settling extracts a well-founded witness per clause: a transition
    // qualifies once its value matches the final cost and every in-table
    // child settled in an earlier round.
    std::vector<std::optional<Transition>> settle() {
        std::vector<std::optional<Transition>> witness(u.states());
        std::vector<bool> settled(u.states(), false);
        auto childSettled = [&](const Mask& m) {
            return !m.consistent() || settled[u.stateOf(m)];
        };
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> newly;
            for (std::size_t s = 0; s < u.states(); ++s) {
                if (settled[s] || !cost[s]) continue;
                Mask L = u.maskOfState(s);
                std::optional<Transition> pick;
                if (cost[s]->isZero() && coveredByEta(L)) {
                    pick = Transition{Transition::Kind::Leaf, 0, 0};
                }
                if (!pick) {
                    for (std::size_t k = 0; k < impls.size() && !pick; ++k) {
                        const auto& d = impls[k];
                        if (!d.ant.subsetOf(L)) continue;
                        if (d.bottom()) {
                            if (cost[s]->isZero())
                                pick = Transition{Transition::Kind::BottomImpl, k, 0};
                            continue;
                        }
                        bool ready = true;
                        for (const auto& mi : d.cons) {
                            Mask child = d.degree.isZero() ? mi.unionWith(L) : mi;
                            if (!childSettled(child)) ready = false;
                        }
                        if (!ready) continue;
                        Value cand = d.degree.isZero() ? candidateA(L, d) : candidateB(d);
                        if (cand && *cand == *cost[s])
                            pick = Transition{d.degree.isZero() ? Transition::Kind::A
                                                                : Transition::Kind::B,
                                              k, 0};
                    }
                }
                if (!pick) {
                    for (std::size_t v = 0; v < u.size() && !pick; ++v) {
                        if (L.has(v)) continue;
                        Mask withPos = L, withNeg = L;
                        withPos.pos |= std::uint32_t{1} << v;
                        withNeg.neg |= std::uint32_t{1} << v;
                        if (!childSettled(withPos) || !childSettled(withNeg)) continue;
                        Value cand = candidateD(L, v);
                        if (cand && *cand == *cost[s])
                            pick = Transition{Transition::Kind::D, 0, v};
                    }
                }
                if (pick) {
                    witness[s] = *pick;
                    newly.push_back(s);
                }
            }
            for (std::size_t s : newly) {
                settled[s] = true;
                changed = true;
            }
        }
        return witness;
    }
};

struct Builder {
    const Engine& e;
    const std::vector<std::optional<Transition>>& witness;
    std::size_t nodeBudget;
    std::vector<ForestNode> nodes;
    int next = 0;

    int fresh() { return next++; }

    void addStar(int parent, Degree w) {
        if (nodes.size() >= nodeBudget) throw BudgetError("entailment_degree: witness too large");
        nodes.push_back({fresh(), true, Clause(), parent, std::move(w), std::nullopt});
    }

    int expand(const Mask& m, std::optional<int> parent, Degree w) {
        if (nodes.size() >= nodeBudget) throw BudgetError("entailment_degree: witness too large");
        int id = fresh();
        ForestNode n{id, false, e.u.clauseOf(m), parent, std::move(w), std::nullopt};
        if (!m.consistent()) {
            n.justification = CaseC{};
            nodes.push_back(std::move(n));
            addStar(id, Degree::zero());
            return id;
        }
        const auto& slot = witness[e.u.stateOf(m)];
        if (!slot) throw std::logic_error("entailment_degree: unsettled clause in reconstruction");
        const Transition& t = *slot;
        switch (t.kind) {
            case Transition::Kind::Leaf:
                break;
            case Transition::Kind::BottomImpl: {
                const auto& d = e.impls[t.impl];
                n.justification = d.degree.isZero() ? Justification(CaseA{t.impl})
                                                    : Justification(CaseB{t.impl});
                nodes.push_back(std::move(n));
                addStar(id, d.degree);
                return id;
            }
            case Transition::Kind::A: {
                n.justification = CaseA{t.impl};
                nodes.push_back(std::move(n));
                for (const auto& mi : e.impls[t.impl].cons)
                    expand(mi.unionWith(m), id, Degree::zero());
                return id;
            }
            case Transition::Kind::B: {
                n.justification = CaseB{t.impl};
                nodes.push_back(std::move(n));
                for (const auto& mi : e.impls[t.impl].cons)
                    expand(mi, id, e.impls[t.impl].degree);
                return id;
            }
            case Transition::Kind::D: {
                n.justification = CaseD{e.u.vars[t.var]};
                nodes.push_back(std::move(n));
                Mask withPos = m, withNeg = m;
                withPos.pos |= std::uint32_t{1} << t.var;
                withNeg.neg |= std::uint32_t{1} << t.var;
                expand(withPos, id, Degree::zero());
                expand(withNeg, id, Degree::zero());
                return id;
            }
        }
        nodes.push_back(std::move(n));
        return id;
    }
};

}  // namespace

Clause CostTable::clauseAt(std::size_t index) const {
    std::vector<Literal> lits;
    for (const auto& v : vars) {
        switch (index % 3) {
            case 1:
                lits.emplace_back(v, true);
                break;
            case 2:
                lits.emplace_back(v, false);
                break;
        }
        index /= 3;
    }
    return Clause(std::move(lits));
}

std::size_t CostTable::indexOf(const Clause& c) const {
    std::size_t s = 0;
    std::size_t scale = 1;
    for (const auto& v : vars) {
        if (c.contains(Literal(v, true)))
            s += scale;
        else if (c.contains(Literal(v, false)))
            s += 2 * scale;
        scale *= 3;
    }
    return s;
}

DegreeResult entailment_degree(const BasicTheory& tb, const Formula& zeta, const Formula& eta,
                               const ProveOptions& opts, CostTable* tableOut) {
    DegreeResult out;
    ClauseSet zetaSet = standard_clause_set(zeta);

    Engine e(tb, zeta, eta, opts);
    e.iterate();
    if (tableOut) {
        tableOut->vars = e.u.vars;
        tableOut->cost = e.cost;
    }

    if (zetaSet.isEmpty()) {
        // antecedent equivalent to bottom: provable at 0 with the empty forest
        out.provable = true;
        out.degree = Degree::zero();
        out.forest = ProofForest();
        return out;
    }

    Degree degree = Degree::zero();
    for (const auto& k : zetaSet.clauses()) {
        Value v = e.cost[e.u.stateOf(e.u.maskOf(k))];
        if (!v) return out;  // not provable
        degree = max(degree, *v);
    }

    auto witness = e.settle();
    Builder b{e, witness, opts.nodeBudget, {}, 0};
    for (const auto& k : zetaSet.clauses())
        b.expand(e.u.maskOf(k), std::nullopt, Degree::zero());

    out.provable = true;
    out.degree = degree;
    out.forest = ProofForest(std::move(b.nodes));
    return out;
}

}  // namespace quent
