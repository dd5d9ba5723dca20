#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quent/forest.hpp"
#include "quent/normalize.hpp"
#include "quent/parser.hpp"
#include "quent/prove.hpp"
#include "quent/verify.hpp"
#include "support/gen.hpp"
#include "support/worked_example.hpp"

using namespace quent;

TEST_CASE("forest structural invariants") {
    std::vector<ForestNode> dup(2);
    dup[0].id = 1;
    dup[1].id = 1;
    CHECK_THROWS_AS(ProofForest(std::move(dup)), std::invalid_argument);

    std::vector<ForestNode> orphan(1);
    orphan[0].id = 0;
    orphan[0].parent = 7;
    CHECK_THROWS_AS(ProofForest(std::move(orphan)), std::invalid_argument);

    std::vector<ForestNode> cyclic(2);
    cyclic[0].id = 0;
    cyclic[0].parent = 1;
    cyclic[1].id = 1;
    cyclic[1].parent = 0;
    CHECK_THROWS_AS(ProofForest(std::move(cyclic)), std::invalid_argument);
}

TEST_CASE("forest_length") {
    ProofForest fig = worked::forest();
    CHECK(forest_length(fig) == Degree::fraction(3, 10));

    std::vector<ForestNode> single(1);
    single[0].id = 0;
    single[0].clause = parse_clause_text("{a}");
    CHECK(forest_length(ProofForest(std::move(single))).isZero());

    // a branch through * counts zero even with positive weights above it
    ProofForest starry = parse_forest(
                             "node 0 {a} root w=0 just=B:0\n"
                             "node 1 * parent=0 w=1/2 just=leaf\n")
                             .forest;
    CHECK(forest_length(starry).isZero());
}

TEST_CASE("verify_forest accepts the worked example and finds all four cases") {
    BasicTheory tb = to_basic_theory(worked::theory()).theory;
    ProofForest fig = worked::forest();
    VerificationReport r = verify_forest(fig, tb, worked::goal());
    CHECK(r.ok);
    CHECK(r.length == Degree::fraction(3, 10));
    JustificationCounts counts = count_justifications(fig);
    CHECK(counts.caseA > 0);
    CHECK(counts.caseB > 0);
    CHECK(counts.caseC > 0);
    CHECK(counts.caseD > 0);

    GradedImplication tight = worked::goal();
    tight.degree = Degree::fraction(1, 5);
    VerificationReport r2 = verify_forest(fig, tb, tight);
    CHECK_FALSE(r2.ok);
    bool t3 = false;
    for (const auto& v : r2.violations) t3 = t3 || v.tag == "T3";
    CHECK(t3);
}

TEST_CASE("a bottom-equivalent antecedent accepts any forest") {
    BasicTheory tb;
    VerificationReport r =
        verify_forest(ProofForest(), tb, parse_implication("0 -> [0] x"));
    CHECK(r.ok);

    // even a forest that would otherwise violate the conditions
    ProofForest junk = parse_forest("node 0 {q} root w=0 just=leaf\n").forest;
    CHECK(verify_forest(junk, tb, parse_implication("a & ~a -> [0] x")).ok);
}

TEST_CASE("verify_forest violation reporting") {
    BasicTheory tb = to_basic_theory(worked::theory()).theory;

    // unknown implication index
    ProofForest badIdx = parse_forest(
                             "node 0 {a,b} root w=0 just=A:9\n"
                             "node 1 {x} parent=0 w=0 just=leaf\n")
                             .forest;
    VerificationReport r = verify_forest(badIdx, tb, worked::goal());
    CHECK_FALSE(r.ok);

    // missing root for the antecedent clause
    ProofForest wrongRoot = parse_forest("node 0 {q} root w=0 just=leaf\n").forest;
    VerificationReport r2 = verify_forest(wrongRoot, tb, worked::goal());
    bool t1 = false;
    for (const auto& v : r2.violations) t1 = t1 || v.tag == "T1";
    CHECK(t1);

    // sibling edge weights must agree
    ProofForest uneven = parse_forest(
                             "node 0 {a,b} root w=0 just=A:0\n"
                             "node 1 {a,b,~b} parent=0 w=0 just=C\n"
                             "node 2 * parent=1 w=0 just=leaf\n"
                             "node 3 {a,b,c} parent=0 w=1/10 just=leaf\n")
                             .forest;
    VerificationReport r3 = verify_forest(uneven, tb, worked::goal());
    CHECK_FALSE(r3.ok);
}

TEST_CASE("user-supplied clause sets are honoured only when equivalent") {
    BasicTheory tb;
    GradedImplication goal = parse_implication("a | b -> [0] a | b");
    // canonical sets verify with roots {a} and {b}
    ProofForest twoRoots = parse_forest(
                               "node 0 {a} root w=0 just=leaf\n"
                               "node 1 {b} root w=0 just=leaf\n")
                               .forest;
    CHECK(verify_forest(twoRoots, tb, goal).ok);

    VerifyOptions opts;
    opts.antecedentSet = ClauseSet({parse_clause_text("{a}")});
    VerificationReport bad = verify_forest(twoRoots, tb, goal, opts);
    CHECK_FALSE(bad.ok);  // {a} alone is not equivalent to a | b

    VerifyOptions opts2;
    opts2.antecedentSet = ClauseSet({parse_clause_text("{a}"), parse_clause_text("{b}"),
                                     parse_clause_text("{a,b}")});
    CHECK(verify_forest(twoRoots, tb, goal, opts2).ok);
}

TEST_CASE("forest files round trip") {
    ProofForest fig = worked::forest();
    GradedImplication goal = worked::goal();
    std::string text = render_forest(fig, &goal);
    ForestFile file = parse_forest(text);
    REQUIRE(file.goal.has_value());
    CHECK(*file.goal == goal);
    CHECK(render_forest(file.forest, &*file.goal) == text);

    CHECK_THROWS_AS(parse_forest("node x {a} root w=0 just=leaf\n"), ParseError);
    CHECK_THROWS_AS(parse_forest("node 0 {a} parent=3 w=0 just=leaf\n"), ParseError);
    CHECK_THROWS_AS(parse_forest("node 0 * root w=0 just=C\n"), ParseError);
}

TEST_CASE("machine-found witnesses verify and stay sound on random models") {
    gen::Rng rng(31);
    auto vars = gen::variablePool(3);
    int proved = 0;
    for (int i = 0; i < 200 && proved < 60; ++i) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
        if (!r.provable) continue;
        ++proved;
        GradedImplication goal{inst.zeta, inst.eta, *r.degree};
        VerificationReport rep = verify_forest(*r.forest, inst.theory, goal);
        CHECK(rep.ok);
        // soundness probe: models of the theory satisfy the goal
        Theory flat = flatten(inst.theory);
        for (int k = 0; k < 10; ++k) {
            Model m = gen::randomModel(rng, 3, vars);
            if (!satisfies_all(m, flat)) continue;
            CHECK(satisfies(m, goal));
        }
    }
    CHECK(proved >= 40);
}

TEST_CASE("an explicit goal overrides the file header") {
    BasicTheory tb;
    std::string text =
        "goal: a -> [0] a\n"
        "node 0 {a} root w=0 just=leaf\n";
    ForestFile file = parse_forest(text);
    REQUIRE(file.goal.has_value());
    // header goal verifies, a stricter one does not
    CHECK(verify_forest(file.forest, tb, *file.goal).ok);
    CHECK_FALSE(verify_forest(file.forest, tb, parse_implication("a -> [0] b")).ok);
}
