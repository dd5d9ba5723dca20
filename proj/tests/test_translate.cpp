#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quent/errors.hpp"
#include "quent/normalize.hpp"
#include "quent/parser.hpp"
#include "quent/prove.hpp"
#include "quent/translate.hpp"
#include "quent/verify.hpp"
#include "support/gen.hpp"
#include "support/worked_example.hpp"

using namespace quent;

TEST_CASE("the worked example's forest becomes a checker-clean rule proof") {
    BasicTheory tb = to_basic_theory(worked::theory()).theory;
    GradedImplication goal = worked::goal();
    RuleProof p = forest_to_rule_proof(worked::forest(), tb, goal);
    CHECK(check_rule_proof(p, flatten(tb)).ok);
    CHECK(p.conclusion() == goal);
}

TEST_CASE("a single root-leaf translates to a short R1 proof") {
    BasicTheory tb;
    GradedImplication goal = parse_implication("a -> [0] a");
    ProofForest f = parse_forest("node 0 {a} root w=0 just=leaf\n").forest;
    RuleProof p = forest_to_rule_proof(f, tb, goal);
    CHECK(check_rule_proof(p, Theory{}).ok);
    CHECK(p.conclusion() == goal);
    CHECK(p.steps.size() <= 2);
}

TEST_CASE("bottom-equivalent antecedents use R1 and R3") {
    BasicTheory tb;
    GradedImplication goal = parse_implication("a & ~a -> [1/5] b");
    RuleProof p = forest_to_rule_proof(ProofForest(), tb, goal);
    CHECK(check_rule_proof(p, Theory{}).ok);
    CHECK(p.conclusion() == goal);
}

TEST_CASE("translation requires a pruned forest") {
    BasicTheory tb = to_basic_theory(parse_theory("a -> [0] 0\n")).theory;
    GradedImplication goal = parse_implication("a -> [1/2] b");
    ProofForest f = parse_forest(
                        "node 0 {a} root w=0 just=A:0\n"
                        "node 1 * parent=0 w=0 just=leaf\n"
                        "node 2 {b} parent=1 w=0 just=leaf\n")
                        .forest;
    CHECK_THROWS_AS(forest_to_rule_proof(f, tb, goal), PreconditionError);
    ProofForest pruned = normalize_forest(f, tb, goal, default_normalize_passes());
    RuleProof p = forest_to_rule_proof(pruned, tb, goal);
    CHECK(check_rule_proof(p, flatten(tb)).ok);
}

TEST_CASE("rule proofs translate to verifying forests per rule") {
    BasicTheory tb = to_basic_theory(parse_theory("a -> [0.1] b\nb -> [0.2] c\n")).theory;
    Theory flat = flatten(tb);

    RuleProof chain;
    chain.steps.push_back({flat.implications[0], RAxiom{0}});
    chain.steps.push_back({flat.implications[1], RAxiom{1}});
    chain.steps.push_back({parse_implication("a -> [0.3] c"), R6{0, 1}});
    REQUIRE(check_rule_proof(chain, flat).ok);
    ProofForest f = rule_proof_to_forest(chain, tb);
    VerificationReport r = verify_forest(f, tb, chain.conclusion());
    CHECK(r.ok);
    CHECK(r.length == Degree::fraction(3, 10));

    RuleProof refl;
    refl.steps.push_back({parse_implication("a -> [0] a"), R1{}});
    ProofForest f2 = rule_proof_to_forest(refl, tb);
    CHECK(verify_forest(f2, tb, refl.conclusion()).ok);
    CHECK(f2.size() == 1);

    BasicTheory bot = to_basic_theory(parse_theory("a -> [0.3] 0\n")).theory;
    Theory botFlat = flatten(bot);
    RuleProof capped;
    capped.steps.push_back({botFlat.implications[0], RAxiom{0}});
    capped.steps.push_back({parse_implication("a -> [0] 0"), R4{0}});
    REQUIRE(check_rule_proof(capped, botFlat).ok);
    ProofForest f3 = rule_proof_to_forest(capped, bot);
    CHECK(verify_forest(f3, bot, capped.conclusion()).ok);
    for (const auto& n : f3.nodes())
        if (f3.isTerminal(n.id)) CHECK(n.improper);
}

TEST_CASE("unchecked proofs are rejected") {
    BasicTheory tb;
    RuleProof bogus;
    bogus.steps.push_back({parse_implication("a -> [0] b"), R1{}});
    CHECK_THROWS_AS(rule_proof_to_forest(bogus, tb), PreconditionError);
}

TEST_CASE("round trips on random material") {
    gen::Rng rng(73);
    int forestTrips = 0, proofTrips = 0;
    for (int i = 0; i < 200 && (forestTrips < 40 || proofTrips < 40); ++i) {
        gen::Instance inst = gen::randomInstance(rng);

        if (forestTrips < 40) {
            DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
            if (r.provable) {
                GradedImplication goal{inst.zeta, inst.eta, *r.degree};
                RuleProof p = forest_to_rule_proof(*r.forest, inst.theory, goal);
                REQUIRE(check_rule_proof(p, flatten(inst.theory)).ok);
                CHECK(p.conclusion() == goal);
                ProofForest back = rule_proof_to_forest(p, inst.theory);
                VerificationReport rep = verify_forest(back, inst.theory, goal);
                CHECK(rep.ok);
                CHECK(rep.length <= goal.degree);
                ++forestTrips;
            }
        }

        if (proofTrips < 40) {
            RuleProof p = gen::randomRuleProof(rng, inst.theory, 10);
            REQUIRE(check_rule_proof(p, flatten(inst.theory)).ok);
            ProofForest f = rule_proof_to_forest(p, inst.theory);
            CHECK(verify_forest(f, inst.theory, p.conclusion()).ok);
            // and back again: forest -> proof is checker-clean
            ProofForest pruned = normalize_forest(
                f, inst.theory, p.conclusion(),
                {NormalizePass{}});  // default-constructed pass = prune-improper
            RuleProof p2 = forest_to_rule_proof(pruned, inst.theory, p.conclusion());
            CHECK(check_rule_proof(p2, flatten(inst.theory)).ok);
            CHECK(p2.conclusion() == p.conclusion());
            ++proofTrips;
        }
    }
    CHECK(forestTrips >= 40);
    CHECK(proofTrips >= 40);
}

TEST_CASE("R2 translation handles constant and disjunctive gamma") {
    BasicTheory tb = to_basic_theory(parse_theory("a -> [0] b\n")).theory;
    Theory flat = flatten(tb);

    RuleProof viaTop;
    viaTop.steps.push_back({flat.implications[0], RAxiom{0}});
    viaTop.steps.push_back(
        {{Formula::conj(parse_formula("a"), Formula::top()),
          Formula::conj(parse_formula("b"), Formula::top()), Degree::zero()},
         R2{0, Formula::top()}});
    REQUIRE(check_rule_proof(viaTop, flat).ok);
    ProofForest f1 = rule_proof_to_forest(viaTop, tb);
    CHECK(verify_forest(f1, tb, viaTop.conclusion()).ok);

    RuleProof viaBottom;
    viaBottom.steps.push_back({flat.implications[0], RAxiom{0}});
    viaBottom.steps.push_back(
        {{Formula::conj(parse_formula("a"), Formula::bottom()),
          Formula::conj(parse_formula("b"), Formula::bottom()), Degree::zero()},
         R2{0, Formula::bottom()}});
    REQUIRE(check_rule_proof(viaBottom, flat).ok);
    ProofForest f2 = rule_proof_to_forest(viaBottom, tb);
    CHECK(verify_forest(f2, tb, viaBottom.conclusion()).ok);

    Formula gamma = parse_formula("c | ~a & d");
    RuleProof viaDisj;
    viaDisj.steps.push_back({flat.implications[0], RAxiom{0}});
    viaDisj.steps.push_back({{Formula::conj(parse_formula("a"), gamma),
                              Formula::conj(parse_formula("b"), gamma), Degree::zero()},
                             R2{0, gamma}});
    REQUIRE(check_rule_proof(viaDisj, flat).ok);
    ProofForest f3 = rule_proof_to_forest(viaDisj, tb);
    CHECK(verify_forest(f3, tb, viaDisj.conclusion()).ok);
}
