#include "quent/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quent/errors.hpp"

namespace quent {
namespace {

using Value = std::optional<Degree>;  // nullopt = nothing verifies

bool less(const Value& a, const Value& b) {
    if (!b) return a.has_value();
    if (!a) return false;
    return *a < *b;
}

// Labels are clauses over the instance variables packed into 2m bits:
// low m bits positive literals, high m bits negative literals. Inconsistent
// labels are part of the search space.
struct Searcher {
    std::vector<Variable> vars;
    std::size_t m;
    std::uint32_t posBits;
    std::size_t maxNodes;
    std::vector<std::pair<std::uint32_t, Degree>> impls;  // antecedent mask + degree
    std::vector<std::vector<std::uint32_t>> implCons;     // consequent clause masks
    std::vector<std::uint32_t> etaMasks;
    std::vector<Value> bfTable;   // (label, budget) -> min verified length
    std::vector<bool> bfDone;
    std::vector<Value> gTable;    // (bound, budget) -> min over sublabels
    std::vector<bool> gDone;
    std::size_t ops = 0;
    static constexpr std::size_t kOpBudget = 400000000;

    Searcher(const BasicTheory& tb, const Formula& zeta, const Formula& eta, std::size_t bound)
        : maxNodes(bound) {
        std::set<Variable> vs = tb.variables();
        auto a = zeta.variables();
        auto b = eta.variables();
        vs.insert(a.begin(), a.end());
        vs.insert(b.begin(), b.end());
        vars.assign(vs.begin(), vs.end());
        m = vars.size();
        if (m > 8) throw BudgetError("brute_force_degree: too many variables for exhaustion");
        posBits = (std::uint32_t{1} << m) - 1;
        for (const auto& imp : tb.implications) {
            impls.emplace_back(maskOf(imp.antecedent()), imp.degree());
            std::vector<std::uint32_t> cons;
            for (const auto& c : imp.consequent().clauses()) cons.push_back(maskOf(c));
            implCons.push_back(std::move(cons));
        }
        ClauseSet etaSet = standard_clause_set(eta);
        for (const auto& c : etaSet.clauses()) etaMasks.push_back(maskOf(c));
        std::size_t labels = std::size_t{1} << (2 * m);
        bfTable.assign(labels * (maxNodes + 1), std::nullopt);
        bfDone.assign(labels * (maxNodes + 1), false);
        gTable.assign(labels * (maxNodes + 1), std::nullopt);
        gDone.assign(labels * (maxNodes + 1), false);
    }

    std::uint32_t maskOf(const Clause& c) const {
        std::uint32_t out = 0;
        for (const auto& l : c.literals()) {
            std::size_t v =
                std::lower_bound(vars.begin(), vars.end(), l.var) - vars.begin();
            out |= std::uint32_t{1} << (l.positive ? v : m + v);
        }
        return out;
    }

    Clause clauseOf(std::uint32_t label) const {
        std::vector<Literal> lits;
        for (std::size_t v = 0; v < m; ++v) {
            if ((label >> v) & 1) lits.emplace_back(vars[v], true);
            if ((label >> (m + v)) & 1) lits.emplace_back(vars[v], false);
        }
        return Clause(std::move(lits));
    }

    bool inconsistent(std::uint32_t label) const { return (label & (label >> m) & posBits) != 0; }
    static bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

    bool coveredByEta(std::uint32_t label) const {
        for (auto e : etaMasks)
            if (subset(e, label)) return true;
        return false;
    }

    void spend() {
        if (++ops > kOpBudget) throw BudgetError("brute_force_degree: operation budget exhausted");
    }

    std::size_t slot(std::uint32_t label, std::size_t n) const {
        return static_cast<std::size_t>(label) * (maxNodes + 1) + n;
    }

    // min over sublabels ch of bound of bf(ch, n)
    Value minOverSubsets(std::uint32_t bound, std::size_t n) {
        std::size_t idx = slot(bound, n);
        if (gDone[idx]) return gTable[idx];
        gDone[idx] = true;  // budgets strictly decrease through bf, no cycle
        Value best;
        std::uint32_t s = bound;
        while (true) {
            spend();
            Value v = bf(s, n);
            if (less(v, best)) best = v;
            if (s == 0) break;
            s = (s - 1) & bound;
        }
        gTable[idx] = best;
        return best;
    }

    // Best value of a node with children constrained by `bounds` (each child
    // any sublabel of its bound), `extra` added on top, total child budget n.
    Value combineChildren(const std::vector<std::uint32_t>& bounds, const Degree& extra,
                          std::size_t n) {
        std::size_t l = bounds.size();
        if (n < l) return std::nullopt;
        std::vector<Value> dp(n + 1);  // dp[m] over the first i children
        for (std::size_t mm = 0; mm <= n; ++mm) dp[mm] = Degree::zero();
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<Value> next(n + 1, std::nullopt);
            for (std::size_t total = i + 1; total <= n; ++total) {
                Value best;
                for (std::size_t mi = 1; mi + i <= total; ++mi) {
                    Value prev = dp[total - mi];
                    if (!prev) continue;
                    Value gi = minOverSubsets(bounds[i], mi);
                    if (!gi) continue;
                    Value cand = max(*prev, *gi);
                    if (less(cand, best)) best = cand;
                }
                next[total] = best;
            }
            dp = std::move(next);
        }
        Value best;
        for (std::size_t total = l; total <= n; ++total)
            if (dp[total] && less(dp[total], best)) best = dp[total];
        if (!best) return std::nullopt;
        return extra + *best;
    }

    // minimum length of a verifying tree rooted exactly at `label` with at
    // most n nodes
    Value bf(std::uint32_t label, std::size_t n) {
        if (n == 0) return std::nullopt;
        std::size_t idx = slot(label, n);
        if (bfDone[idx]) return bfTable[idx];
        bfDone[idx] = true;
        spend();
        Value best;
        if (coveredByEta(label)) best = Degree::zero();  // leaf
        if (!best && n >= 2 && inconsistent(label)) best = Degree::zero();  // case C
        for (std::size_t k = 0; k < impls.size(); ++k) {
            if (!subset(impls[k].first, label)) continue;
            if (implCons[k].empty()) {
                if (n >= 2 && less(Value(Degree::zero()), best)) best = Degree::zero();
                continue;
            }
            std::vector<std::uint32_t> bounds = implCons[k];
            Degree extra = impls[k].second;
            if (extra.isZero())
                for (auto& b : bounds) b |= label;  // case A: child inside M_i union L
            Value cand = combineChildren(bounds, extra, n - 1);
            if (less(cand, best)) best = cand;
        }
        for (std::size_t v = 0; v < m; ++v) {  // case D over every variable
            std::uint32_t posLit = std::uint32_t{1} << v;
            std::uint32_t negLit = std::uint32_t{1} << (m + v);
            Value cand = combineSplit(label, posLit, negLit, n - 1);
            if (less(cand, best)) best = cand;
        }
        bfTable[idx] = best;
        return best;
    }

    // Case D children: {lit} plus any sublabel of `label`; two children taking
    // n nodes in total.
    Value combineSplit(std::uint32_t label, std::uint32_t posLit, std::uint32_t negLit,
                       std::size_t n) {
        if (n < 2) return std::nullopt;
        Value best;
        for (std::size_t m1 = 1; m1 + 1 <= n; ++m1) {
            Value a = minOverFixedPlus(label, posLit, m1);
            if (!a) continue;
            Value b = minOverFixedPlus(label, negLit, n - m1);
            if (!b) continue;
            Value cand = max(*a, *b);
            if (less(cand, best)) best = cand;
        }
        return best;
    }

    // min over S subset of label of bf({lit} | S, n)
    Value minOverFixedPlus(std::uint32_t label, std::uint32_t lit, std::size_t n) {
        Value best;
        std::uint32_t s = label;
        while (true) {
            spend();
            Value v = bf(s | lit, n);
            if (less(v, best)) best = v;
            if (s == 0) break;
            s = (s - 1) & label;
        }
        return best;
    }

    // --- materialization -------------------------------------------------

    std::uint32_t argminSubset(std::uint32_t bound, std::size_t n, const Degree& target) {
        std::uint32_t s = bound;
        while (true) {
            Value v = bf(s, n);
            if (v && *v == target) return s;
            if (s == 0) break;
            s = (s - 1) & bound;
        }
        throw std::logic_error("brute_force_degree: lost subset witness");
    }

    // child budgets and labels reproducing combineChildren's optimum
    struct ChildPick {
        std::uint32_t label;
        std::size_t budget;
    };
    std::vector<ChildPick> pickChildren(const std::vector<std::uint32_t>& bounds,
                                        const Degree& extra, std::size_t n, const Degree& value) {
        std::size_t l = bounds.size();
        // recompute the dp, then backtrack greedily
        for (std::size_t total = l; total <= n; ++total) {
            auto attempt = tryPick(bounds, extra, total, value);
            if (!attempt.empty()) return attempt;
        }
        throw std::logic_error("brute_force_degree: lost child witness");
    }

    std::vector<ChildPick> tryPick(const std::vector<std::uint32_t>& bounds, const Degree& extra,
                                   std::size_t total, const Degree& value) {
        // target for the max over children
        std::size_t l = bounds.size();
        std::vector<ChildPick> out;
        std::size_t remaining = total;
        for (std::size_t i = 0; i < l; ++i) {
            bool found = false;
            std::size_t maxBudget = remaining - (l - 1 - i);
            for (std::size_t mi = 1; mi <= maxBudget && !found; ++mi) {
                Value gi = minOverSubsets(bounds[i], mi);
                if (!gi) continue;
                if (extra + *gi > value) continue;
                // feasible if the rest can also stay within value
                if (restFeasible(bounds, extra, i + 1, remaining - mi, value)) {
                    out.push_back({argminSubset(bounds[i], mi, *gi), mi});
                    remaining -= mi;
                    found = true;
                }
            }
            if (!found) return {};
        }
        // the combined value must match exactly (max over children + extra)
        Degree got = Degree::zero();
        for (const auto& c : out) {
            Value v = bf(c.label, c.budget);
            got = max(got, *v);
        }
        if (!(extra + got == value)) return {};
        return out;
    }

    bool restFeasible(const std::vector<std::uint32_t>& bounds, const Degree& extra,
                      std::size_t from, std::size_t budget, const Degree& value) {
        std::size_t l = bounds.size();
        if (from == l) return true;
        if (budget < l - from) return false;
        std::size_t maxBudget = budget - (l - 1 - from);
        for (std::size_t mi = 1; mi <= maxBudget; ++mi) {
            Value gi = minOverSubsets(bounds[from], mi);
            if (!gi || extra + *gi > value) continue;
            if (restFeasible(bounds, extra, from + 1, budget - mi, value)) return true;
        }
        return false;
    }

    struct Out {
        std::vector<ForestNode> nodes;
        int next = 0;
    };

    void materialize(Out& out, std::uint32_t label, std::size_t n, std::optional<int> parent,
                     const Degree& w) {
        Value v = bf(label, n);
        if (!v) throw std::logic_error("brute_force_degree: materializing an unprovable label");
        int id = out.next++;
        ForestNode node{id, false, clauseOf(label), parent, w, std::nullopt};
        if (coveredByEta(label) && v->isZero()) {
            out.nodes.push_back(std::move(node));
            return;
        }
        if (n >= 2 && inconsistent(label) && v->isZero()) {
            node.justification = CaseC{};
            out.nodes.push_back(std::move(node));
            out.nodes.push_back({out.next++, true, Clause(), id, Degree::zero(), std::nullopt});
            return;
        }
        for (std::size_t k = 0; k < impls.size(); ++k) {
            if (!subset(impls[k].first, label)) continue;
            const Degree& deg = impls[k].second;
            if (implCons[k].empty()) {
                if (n >= 2 && v->isZero()) {
                    node.justification =
                        deg.isZero() ? Justification(CaseA{k}) : Justification(CaseB{k});
                    out.nodes.push_back(std::move(node));
                    out.nodes.push_back({out.next++, true, Clause(), id, deg, std::nullopt});
                    return;
                }
                continue;
            }
            std::vector<std::uint32_t> bounds = implCons[k];
            if (deg.isZero())
                for (auto& b : bounds) b |= label;
            Value cand = combineChildren(bounds, deg, n - 1);
            if (!cand || !(*cand == *v)) continue;
            node.justification = deg.isZero() ? Justification(CaseA{k}) : Justification(CaseB{k});
            out.nodes.push_back(std::move(node));
            auto picks = pickChildren(bounds, deg, n - 1, *v);
            for (const auto& p : picks) {
                Value pv = bf(p.label, p.budget);
                (void)pv;
                materialize(out, p.label, p.budget, id, deg);
            }
            return;
        }
        for (std::size_t var = 0; var < m; ++var) {
            std::uint32_t posLit = std::uint32_t{1} << var;
            std::uint32_t negLit = std::uint32_t{1} << (m + var);
            Value cand = combineSplit(label, posLit, negLit, n - 1);
            if (!cand || !(*cand == *v)) continue;
            node.justification = CaseD{vars[var]};
            out.nodes.push_back(std::move(node));
            // recover the split pick
            for (std::size_t m1 = 1; m1 + 1 <= n - 1; ++m1) {
                Value a = minOverFixedPlus(label, posLit, m1);
                Value b = minOverFixedPlus(label, negLit, n - 1 - m1);
                if (!a || !b || !(max(*a, *b) == *v)) continue;
                std::uint32_t la = argminFixedPlus(label, posLit, m1, *a);
                std::uint32_t lb = argminFixedPlus(label, negLit, n - 1 - m1, *b);
                materialize(out, la, m1, id, Degree::zero());
                materialize(out, lb, n - 1 - m1, id, Degree::zero());
                return;
            }
            throw std::logic_error("brute_force_degree: lost split witness");
        }
        throw std::logic_error("brute_force_degree: no option reproduces the table value");
    }

    std::uint32_t argminFixedPlus(std::uint32_t label, std::uint32_t lit, std::size_t n,
                                  const Degree& target) {
        std::uint32_t s = label;
        while (true) {
            Value v = bf(s | lit, n);
            if (v && *v == target) return s | lit;
            if (s == 0) break;
            s = (s - 1) & label;
        }
        throw std::logic_error("brute_force_degree: lost split child witness");
    }
};

}  // namespace

DegreeResult brute_force_degree(const BasicTheory& tb, const Formula& zeta, const Formula& eta,
                                std::size_t maxNodes) {
    DegreeResult out;
    ClauseSet zetaSet = standard_clause_set(zeta);
    if (zetaSet.isEmpty()) {
        out.provable = true;
        out.degree = Degree::zero();
        out.forest = ProofForest();
        return out;
    }

    Searcher s(tb, zeta, eta, maxNodes);
    const auto& roots = zetaSet.clauses();
    const std::size_t p = roots.size();
    if (p > maxNodes) return out;

    // budget split across the root trees; each root may be any subset of its
    // antecedent clause
    std::vector<std::vector<Value>> dp(p + 1, std::vector<Value>(maxNodes + 1));
    for (std::size_t n = 0; n <= maxNodes; ++n) dp[0][n] = Degree::zero();
    for (std::size_t j = 1; j <= p; ++j) {
        std::uint32_t bound = s.maskOf(roots[j - 1]);
        for (std::size_t n = 0; n <= maxNodes; ++n) {
            Value best;
            for (std::size_t mi = 1; mi <= n; ++mi) {
                if (!dp[j - 1][n - mi]) continue;
                Value gi = s.minOverSubsets(bound, mi);
                if (!gi) continue;
                Value cand = max(*dp[j - 1][n - mi], *gi);
                if (less(cand, best)) best = cand;
            }
            dp[j][n] = best;
        }
    }
    if (!dp[p][maxNodes]) return out;
    Degree degree = *dp[p][maxNodes];

    // backtrack per-root budgets
    Searcher::Out built;
    std::vector<std::pair<std::uint32_t, std::size_t>> rootPicks(p);
    std::size_t remaining = maxNodes;
    for (std::size_t j = p; j >= 1; --j) {
        bool found = false;
        for (std::size_t mi = 1; mi <= remaining && !found; ++mi) {
            if (!dp[j - 1][remaining - mi]) continue;
            std::uint32_t bound = s.maskOf(roots[j - 1]);
            Value gi = s.minOverSubsets(bound, mi);
            if (!gi || *gi > degree) continue;
            if (!(max(*dp[j - 1][remaining - mi], *gi) <= degree)) continue;
            rootPicks[j - 1] = {s.argminSubset(bound, mi, *gi), mi};
            remaining -= mi;
            found = true;
        }
        if (!found) throw std::logic_error("brute_force_degree: lost root witness");
    }
    for (std::size_t j = 0; j < p; ++j)
        s.materialize(built, rootPicks[j].first, rootPicks[j].second, std::nullopt, Degree::zero());

    out.provable = true;
    out.degree = degree;
    out.forest = ProofForest(std::move(built.nodes));
    return out;
}

}  // namespace quent
