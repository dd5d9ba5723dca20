// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is exact rational arithmetic.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "quent/countermodel.hpp"
#include "quent/errors.hpp"
#include "quent/normalize.hpp"
#include "quent/oracle.hpp"
#include "quent/parser.hpp"
#include "quent/prove.hpp"
#include "quent/rule_proof.hpp"
#include "quent/translate.hpp"
#include "quent/verify.hpp"
#include "support/gen.hpp"
#include "support/worked_example.hpp"

using namespace quent;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

// ---------------------------------------------------------------- 1 -------
void workedExampleReproduction() {
    auto start = std::chrono::steady_clock::now();
    BasicTheory tb = to_basic_theory(worked::theory()).theory;
    GradedImplication goal = worked::goal();
    DegreeResult r = entailment_degree(tb, goal.antecedent, goal.consequent);
    bool ok = r.provable && *r.degree == Degree::fraction(3, 10);
    if (ok) {
        VerificationReport rep = verify_forest(*r.forest, tb, goal);
        ok = rep.ok;
        JustificationCounts counts = count_justifications(*r.forest);
        ok = ok && counts.caseA > 0 && counts.caseB > 0 && counts.caseC > 0 && counts.caseD > 0;
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && seconds < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "worked example: minimal degree 3/10, witness verifies, all four "
                  "justification cases (%.3fs)",
                  seconds);
    report(1, ok, buf);
}

// ---------------------------------------------------------------- 2 + 7 ---
void oracleEquivalenceAndSumStructure() {
    gen::Rng rng(101);
    int total = 0, proved = 0, escalated = 0, disagreements = 0, sumViolations = 0;
    while (total < 500) {
        gen::Instance inst = gen::randomInstance(rng);
        ++total;
        DegreeResult fast = entailment_degree(inst.theory, inst.zeta, inst.eta);
        DegreeResult slow = brute_force_degree(inst.theory, inst.zeta, inst.eta, 10);
        if (fast.provable &&
            (!slow.provable || !(*slow.degree == *fast.degree))) {
            // The bound-10 exhaustion misses forests larger than 10 nodes.
            // Rerunning the oracle with the bound raised to the engine's
            // witness size puts that witness inside the searched space, so
            // agreement is forced whenever both sides are correct and any
            // remaining difference still counts below.
            ++escalated;
            std::size_t bound = fast.forest->size() > 10 ? fast.forest->size() : 10;
            slow = brute_force_degree(inst.theory, inst.zeta, inst.eta, bound);
        }
        if (fast.provable != slow.provable) {
            ++disagreements;
            continue;
        }
        if (slow.provable) {
            ++proved;
            if (!(*fast.degree == *slow.degree)) ++disagreements;
            auto sums = submultiset_sums(inst.theory);
            bool member = false;
            for (const auto& s : sums) member = member || s == *fast.degree;
            if (!member) ++sumViolations;
        }
    }
    // the worked example's minimal degree is part of the sum-structure claim
    {
        BasicTheory tb = to_basic_theory(worked::theory()).theory;
        DegreeResult r =
            entailment_degree(tb, worked::goal().antecedent, worked::goal().consequent);
        auto sums = submultiset_sums(tb);
        bool member = false;
        for (const auto& s : sums) member = member || (r.degree && s == *r.degree);
        if (!member) ++sumViolations;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "oracle equivalence: %d instances, %d proved by the oracle, %d bound "
                  "escalations, %d disagreements",
                  total, proved, escalated, disagreements);
    report(2, disagreements == 0 && total >= 500, buf);
    std::snprintf(buf, sizeof buf,
                  "minimal degrees are sub-multiset sums of theory degrees (%d violations)",
                  sumViolations);
    report(7, sumViolations == 0, buf);
}

// ---------------------------------------------------------------- 3 -------
void soundnessSuite() {
    gen::Rng rng(103);
    auto vars = gen::variablePool(3);
    int triples = 0, violations = 0;
    while (triples < 500) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
        if (!r.provable) continue;
        GradedImplication proved{inst.zeta, inst.eta, *r.degree};
        Theory flat = flatten(inst.theory);
        for (int k = 0; k < 12 && triples < 500; ++k) {
            Model m = gen::randomModel(rng, 4, vars);
            if (!satisfies_all(m, flat)) continue;
            ++triples;
            if (!satisfies(m, proved)) ++violations;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "soundness: %d satisfying-model triples, %d violations of the proved goal",
                  triples, violations);
    report(3, violations == 0, buf);
}

// ---------------------------------------------------------------- 4 -------
void roundTripSuite() {
    gen::Rng rng(107);
    int forestTrips = 0, proofTrips = 0, failuresHere = 0;
    while (forestTrips < 200 || proofTrips < 200) {
        gen::Instance inst = gen::randomInstance(rng);

        if (forestTrips < 200) {
            DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
            if (r.provable) {
                ++forestTrips;
                GradedImplication goal{inst.zeta, inst.eta, *r.degree};
                try {
                    RuleProof p = forest_to_rule_proof(*r.forest, inst.theory, goal);
                    if (!check_rule_proof(p, flatten(inst.theory)).ok) ++failuresHere;
                    if (!(p.conclusion() == goal)) ++failuresHere;
                } catch (const std::exception&) {
                    ++failuresHere;
                }
            }
        }

        if (proofTrips < 200) {
            ++proofTrips;
            RuleProof p = gen::randomRuleProof(rng, inst.theory, 12);
            if (!check_rule_proof(p, flatten(inst.theory)).ok) {
                ++failuresHere;
                continue;
            }
            try {
                ProofForest f = rule_proof_to_forest(p, inst.theory);
                if (!verify_forest(f, inst.theory, p.conclusion()).ok) ++failuresHere;
            } catch (const std::exception&) {
                ++failuresHere;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "round trips: %d forest->proof and %d proof->forest translations, %d failures",
                  forestTrips, proofTrips, failuresHere);
    report(4, failuresHere == 0, buf);
}

// ---------------------------------------------------------------- 5 -------
void semanticsPropertySuite() {
    gen::Rng rng(109);
    int checks = 0, violations = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++violations;
    };
    for (int i = 0; i < 1000; ++i) {
        FiniteQuasimetricSpace s = gen::randomSpace(rng, 4);
        const std::size_t n = s.size();
        WorldSet A = gen::randomWorldSet(rng, n);
        WorldSet B = gen::randomWorldSet(rng, n);
        WorldSet C = gen::randomWorldSet(rng, n);
        ExtendedDegree c = gen::randomExtendedDegree(rng);
        ExtendedDegree d = gen::randomExtendedDegree(rng);
        std::size_t a = rng.below(n);

        // point distance: membership gives zero, and conversely on finite spaces
        if (B.test(a)) expect(point_distance(s, a, B).isZero());
        if (!B.empty() && point_distance(s, a, B).isZero()) expect(B.test(a));
        // empty-set conventions
        expect(point_distance(s, a, WorldSet(n)).isInf());
        expect(d.isInf() ? neighbourhood(s, d, WorldSet(n)) == WorldSet::full(n)
                         : neighbourhood(s, d, WorldSet(n)).empty());
        // membership in the d-neighbourhood via some witness
        expect((point_distance(s, a, B) <= d) == neighbourhood(s, d, B).test(a));
        if (neighbourhood(s, d, B).test(a) && !B.empty()) {
            bool witness = false;
            for (std::size_t b = 0; b < n; ++b)
                witness = witness || (B.test(b) && s.dist(a, b) <= d);
            expect(witness);
        }
        // U_c(U_d(A)) inside U_{c+d}(A)
        expect(neighbourhood(s, c, neighbourhood(s, d, A)).subsetOf(neighbourhood(s, c + d, A)));
        // Hausdorff laws
        if (A.subsetOf(B)) expect(hausdorff(s, A, B).isZero());
        if (!A.empty() && hausdorff(s, A, B).isZero()) expect(A.subsetOf(B));
        expect((hausdorff(s, A, B) <= d) == A.subsetOf(neighbourhood(s, d, B)));
        expect(hausdorff(s, A.unionWith(B), C) ==
               std::max(hausdorff(s, A, C), hausdorff(s, B, C)));
        if (B.subsetOf(C)) expect(hausdorff(s, A, B) >= hausdorff(s, A, C));
        expect(hausdorff(s, A, C) <= hausdorff(s, A, B) + hausdorff(s, B, C));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "semantics properties: %d checks on random spaces, %d violations",
                  checks, violations);
    report(5, violations == 0 && checks >= 9000, buf);
}

// ---------------------------------------------------------------- 6 -------
bool passRoundHolds(const ProofForest& f, const BasicTheory& tb, const GradedImplication& goal,
                    const NormalizePass& p) {
    try {
        ProofForest once = normalize_forest(f, tb, goal, {p});
        if (!verify_forest(once, tb, goal).ok) return false;
        if (forest_length(once) > forest_length(f)) return false;
        ProofForest twice = normalize_forest(once, tb, goal, {p});
        return render_forest(twice) == render_forest(once);
    } catch (const std::exception&) {
        return false;
    }
}

// first polarity occurring in the forest but in neither goal nor theory
std::optional<Literal> purgeTarget(const ProofForest& f, const BasicTheory& tb,
                                   const GradedImplication& goal) {
    for (const auto& n : f.nodes()) {
        if (n.improper) continue;
        for (const auto& lit : n.clause.literals()) {
            PolarityOccurrence pa = polarity_of(goal.antecedent, lit.var);
            PolarityOccurrence pc = polarity_of(goal.consequent, lit.var);
            if (lit.positive ? (pa.positive || pc.positive) : (pa.negative || pc.negative))
                continue;
            bool inTheory = false;
            for (const auto& imp : tb.implications) {
                if (imp.antecedent().contains(lit)) inTheory = true;
                for (const auto& m : imp.consequent().clauses())
                    if (m.contains(lit)) inTheory = true;
            }
            if (!inTheory) return lit;
        }
    }
    return std::nullopt;
}

void normalizationSuite() {
    gen::Rng rng(113);
    using K = NormalizePass::Kind;
    const K kinds[] = {K::PruneImproper, K::CapInconsistent, K::FreshSplits, K::StandardEnds,
                       K::DropUnused};
    int forests = 0, failuresHere = 0;
    while (forests < 200) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
        if (!r.provable) continue;
        ++forests;
        GradedImplication goal{inst.zeta, inst.eta, *r.degree};
        for (K k : kinds) {
            NormalizePass p;
            p.kind = k;
            if (!passRoundHolds(*r.forest, inst.theory, goal, p)) ++failuresHere;
        }
    }
    // the fresh-polarity elimination runs on machine-found forests that
    // actually contain an eliminable polarity: rule-proof translations, whose
    // splits introduce literals the goal and theory never mention
    auto vars = gen::variablePool(3);
    int purgeRuns = 0;
    while (purgeRuns < 200) {
        BasicTheory tb = gen::randomBasicTheory(rng, vars, 3);
        RuleProof p = gen::randomRuleProof(rng, tb, 10);
        if (!check_rule_proof(p, flatten(tb)).ok) {
            ++failuresHere;
            continue;
        }
        ProofForest f = rule_proof_to_forest(p, tb);
        GradedImplication goal = p.conclusion();
        auto lit = purgeTarget(f, tb, goal);
        if (!lit) continue;
        ++purgeRuns;
        NormalizePass purge;
        purge.kind = NormalizePass::Kind::PurgePolarity;
        purge.var = lit->var;
        purge.positive = lit->positive;
        if (!passRoundHolds(f, tb, goal, purge)) {
            ++failuresHere;
            continue;
        }
        ProofForest out = normalize_forest(f, tb, goal, {purge});
        for (const auto& n : out.nodes())
            if (n.clause.contains(*lit)) ++failuresHere;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "normalization: 5 passes over %d machine-found forests plus %d polarity "
                  "eliminations, %d failures",
                  forests, purgeRuns, failuresHere);
    report(6, failuresHere == 0, buf);
}

// ---------------------------------------------------------------- 8 -------
struct CuratedCase {
    const char* theory;
    const char* goal;
    const char* note;
};

void completenessProbe() {
    // hand-auditable non-entailments; each comment names a falsifying model
    const CuratedCase curated[] = {
        {"", "a -> [0] b", "one world with a true, b false"},
        {"a -> [1] b\n", "a -> [1/2] b", "two worlds at distance 1"},
        {"", "a -> [0] a & b", "one world with a true, b false"},
        {"", "a | b -> [0] a", "one world with b true, a false"},
        {"a -> [1/10] b\nb -> [1/5] c\n", "a -> [1/5] c", "chain needs 3/10"},
        {"a -> [0] b\n", "b -> [0] a", "asymmetry: b true somewhere a is not"},
        {"a -> [1/2] b\n", "a -> [0] b", "distance 1/2 exceeds 0"},
        {"", "1 -> [0] a", "one world with a false"},
        {"", "~a -> [0] b", "one world with both false"},
        {"a -> [1/10] b\n", "a -> [1/10] b & c", "c empty while b is nearby"},
        {"a -> [0] b | c\n", "a -> [0] b", "a-world next to a c-only world"},
        {"a -> [1/5] c\nb -> [1/10] c\n", "a | b -> [1/10] c", "the a-branch needs 1/5"},
        {"", "a -> [2] 0", "any a-world; the empty set has no neighbourhood"},
        {"b -> [0] c\n", "a -> [0] c", "a true where the theory says nothing"},
        {"a -> [3/10] b\n", "a -> [1/5] b", "distance 3/10 exceeds 1/5"},
        {"", "a & b -> [0] a & c", "a,b true and c false at one world"},
        {"a -> [1/10] b\na -> [1/10] c\n", "a -> [1/10] b & c",
         "b and c nearby at separate worlds only"},
        {"a -> [0] 0\n", "b -> [0] a", "a empty, b somewhere true"},
        {"a -> [1/10] b\n", "~b -> [1/10] ~a", "graded contraposition fails"},
        {"a & b -> [0] c\n", "a -> [0] c", "a true alone at some world"},
    };

    int curatedFound = 0, curatedTotal = 0, inconsistencies = 0;
    for (const auto& c : curated) {
        ++curatedTotal;
        Theory t = parse_theory(c.theory);
        GradedImplication goal = parse_implication(c.goal);
        BasicConversion conv = to_basic_theory(t);
        DegreeResult r = entailment_degree(conv.theory, goal.antecedent, goal.consequent);
        bool notProvableAtGoal = !r.provable || *r.degree > goal.degree;
        if (!notProvableAtGoal) {
            ++inconsistencies;  // the curated list must consist of non-entailments
            continue;
        }
        CountermodelOptions opts;
        opts.maxWorlds = 4;
        opts.budget = 20000000;
        try {
            auto m = find_countermodel(t, goal, opts);
            if (m) {
                ++curatedFound;
                if (!satisfies_all(*m, t) || satisfies(*m, goal)) ++inconsistencies;
                if (!validate_space(m->space).ok) ++inconsistencies;
            }
        } catch (const BudgetError&) {
        }
    }

    // random not-provable instances: any countermodel found must be genuine
    gen::Rng rng(127);
    int randomRuns = 0;
    while (randomRuns < 100) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
        Degree asked = gen::randomDegree(rng);
        if (r.provable && *r.degree <= asked) continue;  // provable at the asked degree
        ++randomRuns;
        Theory flat = flatten(inst.theory);
        GradedImplication goal{inst.zeta, inst.eta, asked};
        CountermodelOptions opts;
        opts.maxWorlds = 3;
        opts.budget = 2000000;
        try {
            auto m = find_countermodel(flat, goal, opts);
            if (m && (!satisfies_all(*m, flat) || satisfies(*m, goal))) ++inconsistencies;
        } catch (const BudgetError&) {
            // absence of a small countermodel is never treated as failure
        }
    }

    bool ok = curatedFound * 10 >= curatedTotal * 9 && inconsistencies == 0 && randomRuns >= 100;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "completeness probe: %d/%d curated countermodels found (need >= 18), %d random "
                  "probes, %d inconsistencies",
                  curatedFound, curatedTotal, randomRuns, inconsistencies);
    report(8, ok, buf);
}

}  // namespace

int main() {
    workedExampleReproduction();
    oracleEquivalenceAndSumStructure();
    soundnessSuite();
    roundTripSuite();
    semanticsPropertySuite();
    normalizationSuite();
    completenessProbe();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
