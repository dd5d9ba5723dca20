#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quent/countermodel.hpp"
#include "quent/errors.hpp"
#include "quent/oracle.hpp"
#include "quent/parser.hpp"
#include "quent/prove.hpp"
#include "quent/verify.hpp"
#include "support/gen.hpp"
#include "support/worked_example.hpp"

using namespace quent;

TEST_CASE("entailment_degree on the worked example") {
    BasicTheory tb = to_basic_theory(worked::theory()).theory;
    GradedImplication goal = worked::goal();
    DegreeResult r = entailment_degree(tb, goal.antecedent, goal.consequent);
    REQUIRE(r.provable);
    CHECK(*r.degree == Degree::fraction(3, 10));
    CHECK(verify_forest(*r.forest, tb, goal).ok);
}

TEST_CASE("reflexivity is provable at zero from nothing") {
    BasicTheory tb;
    Formula a = parse_formula("a");
    DegreeResult r = entailment_degree(tb, a, a);
    REQUIRE(r.provable);
    CHECK(r.degree->isZero());
    REQUIRE(r.forest.has_value());
    CHECK(r.forest->size() == 1);  // single root that is also a leaf
}

TEST_CASE("chains add degrees") {
    BasicTheory tb = to_basic_theory(parse_theory("a -> [1/10] b\nb -> [1/5] c\n")).theory;
    DegreeResult r = entailment_degree(tb, parse_formula("a"), parse_formula("c"));
    REQUIRE(r.provable);
    CHECK(*r.degree == Degree::fraction(3, 10));
    // confirmed minimal by the independent oracle
    DegreeResult o = brute_force_degree(tb, parse_formula("a"), parse_formula("c"), 10);
    REQUIRE(o.provable);
    CHECK(*o.degree == Degree::fraction(3, 10));
}

TEST_CASE("unprovable goals") {
    BasicTheory tb;
    DegreeResult r = entailment_degree(tb, parse_formula("a"), parse_formula("b"));
    CHECK_FALSE(r.provable);
    CHECK_FALSE(r.degree.has_value());
    // and the semantics module can falsify it
    Theory empty;
    CHECK(find_countermodel(empty, parse_implication("a -> [0] b"), {}).has_value());
}

TEST_CASE("bottom-equivalent antecedents are provable at zero with an empty forest") {
    BasicTheory tb;
    DegreeResult r = entailment_degree(tb, parse_formula("a & ~a"), parse_formula("b"));
    REQUIRE(r.provable);
    CHECK(r.degree->isZero());
    CHECK(r.forest->empty());

    DegreeResult o = brute_force_degree(tb, Formula::bottom(), parse_formula("b"), 6);
    REQUIRE(o.provable);
    CHECK(o.degree->isZero());
    CHECK(o.forest->empty());
}

TEST_CASE("the state budget is enforced") {
    BasicTheory tb;
    Theory big;
    for (char c = 'a'; c <= 'n'; ++c) {
        GradedImplication imp;
        imp.antecedent = Formula::var(std::string(1, c));
        imp.consequent = Formula::var(std::string(1, c) + "x");
        imp.degree = Degree::zero();
        big.implications.push_back(imp);
    }
    BasicTheory bigBasic = to_basic_theory(big).theory;
    ProveOptions opts;
    opts.stateBudget = 1000;
    CHECK_THROWS_AS(
        entailment_degree(bigBasic, parse_formula("a"), parse_formula("ax"), opts), BudgetError);
}

TEST_CASE("oracle on the worked example confirms minimality and the witness verifies") {
    BasicTheory tb = to_basic_theory(worked::theory()).theory;
    GradedImplication goal = worked::goal();
    DegreeResult r = brute_force_degree(tb, goal.antecedent, goal.consequent, 12);
    REQUIRE(r.provable);
    CHECK(*r.degree == Degree::fraction(3, 10));
    VerificationReport rep = verify_forest(*r.forest, tb, goal);
    CHECK(rep.ok);
    CHECK(rep.length <= Degree::fraction(3, 10));
    CHECK(r.forest->size() <= 12);
}

TEST_CASE("oracle exhaustion on an unprovable goal") {
    BasicTheory tb;
    DegreeResult r = brute_force_degree(tb, parse_formula("a"), parse_formula("b"), 6);
    CHECK_FALSE(r.provable);
}

TEST_CASE("engine and oracle agree on random instances") {
    gen::Rng rng(47);
    int checked = 0;
    for (int i = 0; i < 120; ++i) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult fast = entailment_degree(inst.theory, inst.zeta, inst.eta);
        DegreeResult slow = brute_force_degree(inst.theory, inst.zeta, inst.eta, 10);
        if (fast.provable && (!slow.provable || !(*slow.degree == *fast.degree))) {
            // exhaustion bound below the cheapest witness's size; raise it so
            // the run covers the engine's own certificate
            std::size_t bound = fast.forest->size() > 10 ? fast.forest->size() : 10;
            slow = brute_force_degree(inst.theory, inst.zeta, inst.eta, bound);
        }
        REQUIRE(fast.provable == slow.provable);
        if (slow.provable) {
            CHECK(*fast.degree == *slow.degree);
            ++checked;
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("cost tables are monotone under clause extension") {
    gen::Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        gen::Instance inst = gen::randomInstance(rng);
        CostTable table;
        entailment_degree(inst.theory, inst.zeta, inst.eta, {}, &table);
        for (std::size_t s = 0; s < table.states(); ++s) {
            Clause L = table.clauseAt(s);
            // extend by one literal in every possible consistent way
            for (const auto& v : table.vars) {
                if (L.containsVariable(v)) continue;
                for (bool pol : {true, false}) {
                    Clause bigger = L.withLiteral(Literal(v, pol));
                    std::size_t t = table.indexOf(bigger);
                    const auto& cl = table.cost[s];
                    const auto& cb = table.cost[t];
                    if (cl) {
                        REQUIRE(cb.has_value());
                        CHECK(*cb <= *cl);
                    }
                }
            }
        }
    }
}

TEST_CASE("minimal degrees are sub-multiset sums of theory degrees") {
    gen::Rng rng(59);
    int proved = 0;
    for (int i = 0; i < 150 && proved < 60; ++i) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
        if (!r.provable) continue;
        ++proved;
        auto sums = submultiset_sums(inst.theory);
        bool member = false;
        for (const auto& s : sums) member = member || s == *r.degree;
        CHECK(member);
    }
    CHECK(proved >= 40);
}

TEST_CASE("provable goals admit no countermodel within the budget") {
    gen::Rng rng(61);
    int proved = 0;
    for (int i = 0; i < 80 && proved < 25; ++i) {
        gen::Instance inst = gen::randomInstance(rng);
        DegreeResult r = entailment_degree(inst.theory, inst.zeta, inst.eta);
        if (!r.provable) continue;
        ++proved;
        Theory flat = flatten(inst.theory);
        GradedImplication goal{inst.zeta, inst.eta, *r.degree};
        CountermodelOptions opts;
        opts.maxWorlds = 2;
        opts.budget = 400000;
        bool found = false;
        try {
            found = find_countermodel(flat, goal, opts).has_value();
        } catch (const BudgetError&) {
        }
        CHECK_FALSE(found);
    }
    CHECK(proved >= 15);
}
