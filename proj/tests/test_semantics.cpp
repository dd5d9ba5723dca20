#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quent/countermodel.hpp"
#include "quent/errors.hpp"
#include "quent/parser.hpp"
#include "quent/space.hpp"
#include "support/gen.hpp"

using namespace quent;

namespace {

Model tinyModel() {
    return parse_model(
        "worlds w1 w2 w3\n"
        "q w1 w2 1/2\n"
        "q w1 w3 1/4\n"
        "q w2 w3 2\n"
        "q w2 w1 2\n"
        "q w3 w1 2\n"
        "q w3 w2 2\n"
        "var a : w1 w2\n"
        "var b : w2\n");
}

WorldSet setOf(std::size_t n, std::initializer_list<std::size_t> members) {
    WorldSet out(n);
    for (auto i : members) out.set(i);
    return out;
}

}  // namespace

TEST_CASE("validate_space reports axiom violations") {
    FiniteQuasimetricSpace one({"w"});
    CHECK(validate_space(one).ok);

    FiniteQuasimetricSpace two({"a", "b"});
    two.setDist(0, 1, Degree::zero());
    SpaceValidation report = validate_space(two);
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].axiom == "M1");

    FiniteQuasimetricSpace three({"a", "b", "c"});
    three.setDist(0, 2, Degree::fromUint(5));
    three.setDist(0, 1, Degree::fromUint(1));
    three.setDist(1, 2, Degree::fromUint(1));
    three.setDist(1, 0, Degree::fromUint(1));
    three.setDist(2, 0, Degree::fromUint(1));
    three.setDist(2, 1, Degree::fromUint(1));
    SpaceValidation r3 = validate_space(three);
    CHECK_FALSE(r3.ok);
    bool m2 = false;
    for (const auto& v : r3.violations) m2 = m2 || v.axiom == "M2";
    CHECK(m2);
}

TEST_CASE("point_distance") {
    Model m = tinyModel();
    const auto& s = m.space;
    // a member of B is at distance 0
    CHECK(point_distance(s, 1, setOf(3, {1, 2})).isZero());
    // empty set: infimum over nothing
    CHECK(point_distance(s, 0, WorldSet(3)).isInf());
    // the two candidates 1/2 and 1/4 (independently: min of both entries)
    CHECK(point_distance(s, 0, setOf(3, {1, 2})) == ExtendedDegree(Degree::fraction(1, 4)));
}

TEST_CASE("neighbourhood") {
    Model m = tinyModel();
    const auto& s = m.space;
    CHECK(neighbourhood(s, Degree::fromUint(7), WorldSet(3)).empty());
    CHECK(neighbourhood(s, ExtendedDegree::infinity(), WorldSet(3)) == WorldSet::full(3));
    WorldSet b = setOf(3, {1});
    CHECK(b.subsetOf(neighbourhood(s, Degree::zero(), b)));
}

TEST_CASE("hausdorff") {
    Model m = tinyModel();
    const auto& s = m.space;
    CHECK(hausdorff(s, setOf(3, {1}), setOf(3, {1, 2})).isZero());  // A subset of B
    CHECK(hausdorff(s, WorldSet(3), setOf(3, {0})).isZero());       // empty supremum
    // worlds {a,b,c}: dist(a,c)=1, dist(b,c)=2 -> hausdorff({a,b},{c}) = 2
    FiniteQuasimetricSpace s2({"a", "b", "c"});
    s2.setDist(0, 2, Degree::fromUint(1));
    s2.setDist(1, 2, Degree::fromUint(2));
    CHECK(hausdorff(s2, setOf(3, {0, 1}), setOf(3, {2})) == ExtendedDegree(Degree::fromUint(2)));
}

TEST_CASE("evaluate uses Boolean set semantics") {
    Model m = tinyModel();
    CHECK(evaluate(m, Formula::top()) == WorldSet::full(3));
    CHECK(evaluate(m, parse_formula("a & ~a")).empty());
    CHECK(evaluate(m, parse_formula("a & b")) == setOf(3, {1}));
}

TEST_CASE("satisfies") {
    Model m = tinyModel();
    CHECK(satisfies(m, parse_implication("a -> [0] a")));
    // empty consequent with finite degree fails on a nonempty antecedent
    CHECK_FALSE(satisfies(m, parse_implication("a -> [5] 0")));

    Model two = parse_model(
        "worlds w1 w2\nq w1 w2 1/2\nq w2 w1 1/2\nvar a : w1\nvar b : w2\n");
    CHECK(satisfies(two, parse_implication("a -> [1/2] b")));
    CHECK_FALSE(satisfies(two, parse_implication("a -> [1/4] b")));
}

TEST_CASE("model files round trip") {
    Model m = tinyModel();
    Model again = parse_model(render_model(m));
    CHECK(render_model(again) == render_model(m));
    CHECK_THROWS_AS(parse_model("q w1 w2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_model("worlds w w\n"), ParseError);
    CHECK_THROWS_AS(parse_model("worlds w\nq w v 1\n"), ParseError);
}

TEST_CASE("neighbourhood and Hausdorff properties on random spaces") {
    gen::Rng rng(23);
    for (int i = 0; i < 400; ++i) {
        FiniteQuasimetricSpace s = gen::randomSpace(rng, 4);
        REQUIRE(validate_space(s).ok);
        const std::size_t n = s.size();
        WorldSet A = gen::randomWorldSet(rng, n);
        WorldSet B = gen::randomWorldSet(rng, n);
        WorldSet C = gen::randomWorldSet(rng, n);
        ExtendedDegree c = gen::randomExtendedDegree(rng);
        ExtendedDegree d = gen::randomExtendedDegree(rng);

        // U_c(U_d(A)) is inside U_{c+d}(A)
        CHECK(neighbourhood(s, c, neighbourhood(s, d, A)).subsetOf(neighbourhood(s, c + d, A)));
        // q(A u B, C) = q(A,C) max q(B,C)
        CHECK(hausdorff(s, A.unionWith(B), C) ==
              std::max(hausdorff(s, A, C), hausdorff(s, B, C)));
        // B inside C makes targets easier
        CHECK(hausdorff(s, A, B.unionWith(C)) <= hausdorff(s, A, B));
        // triangle
        CHECK(hausdorff(s, A, C) <= hausdorff(s, A, B) + hausdorff(s, B, C));
        // membership characterisation
        for (std::size_t a = 0; a < n; ++a)
            CHECK((point_distance(s, a, B) <= d) == neighbourhood(s, d, B).test(a));
        // finite min-space attainment for nonempty B
        if (!B.empty())
            for (std::size_t a = 0; a < n; ++a) {
                ExtendedDegree pd = point_distance(s, a, B);
                bool attained = false;
                for (std::size_t b = 0; b < n; ++b)
                    if (B.test(b) && s.dist(a, b) == pd) attained = true;
                CHECK(attained);
            }
    }
}

TEST_CASE("find_countermodel examples") {
    Theory empty;
    GradedImplication goal = parse_implication("a -> [0] b");
    auto m = find_countermodel(empty, goal, {});
    REQUIRE(m.has_value());
    CHECK(m->space.size() == 1);
    CHECK_FALSE(satisfies(*m, goal));

    Theory t = parse_theory("a -> [1] b\n");
    GradedImplication weaker = parse_implication("a -> [1/2] b");
    auto m2 = find_countermodel(t, weaker, {});
    REQUIRE(m2.has_value());
    CHECK(m2->space.size() == 2);
    CHECK(satisfies_all(*m2, t));
    CHECK_FALSE(satisfies(*m2, weaker));

    Theory t3 = parse_theory("a -> [0] b\n");
    CHECK_FALSE(find_countermodel(t3, parse_implication("a -> [0] b"), {}).has_value());
}

TEST_CASE("find_countermodel budget") {
    Theory t = parse_theory("a -> [1/10] b\nb -> [1/5] c\n");
    CountermodelOptions opts;
    opts.maxWorlds = 4;
    opts.budget = 10;
    CHECK_THROWS_AS(find_countermodel(t, parse_implication("a -> [0] c"), opts), BudgetError);
}

TEST_CASE("similarity correspondence") {
    CHECK(similarity_to_distance(Degree::fromUint(1)).value.isZero());
    CHECK(similarity_to_distance(Degree::zero()).value.isInf());
    // -ln(1/e) = 1 within the approximation grid
    Degree invE = Degree::fraction(3678794411714423216UL, 10000000000000000000UL);
    ApproxDegree d = similarity_to_distance(invE);
    CHECK_FALSE(d.exact);
    CHECK(std::abs(d.value.finite().toDouble() - 1.0) < 1e-9);

    CHECK(distance_to_similarity(ExtendedDegree::infinity()).value.isZero());
    CHECK(distance_to_similarity(ExtendedDegree(Degree::zero())).value == Degree::fromUint(1));
    ApproxSimilarity s = distance_to_similarity(ExtendedDegree(Degree::fromUint(1)));
    CHECK(std::abs(s.value.toDouble() - std::exp(-1.0)) < 1e-9);

    CHECK_THROWS_AS(similarity_to_distance(Degree::fromUint(2)), std::domain_error);
}
