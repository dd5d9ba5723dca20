#ifndef QUENT_TESTS_WORKED_EXAMPLE_HPP
#define QUENT_TESTS_WORKED_EXAMPLE_HPP

#include "quent/forest.hpp"
#include "quent/parser.hpp"
#include "quent/theory.hpp"

namespace worked {

// The running example: theory {a ->[0] ~b|c, b&c ->[0.3] d|e, d ->[0] ~e},
// goal a&b ->[0.3] (~d&e)|(d&~e). Its minimal degree is 3/10 and its forest
// proof uses all four justification cases.
inline quent::Theory theory() {
    return quent::parse_theory("a -> [0] ~b | c\nb & c -> [0.3] d | e\nd -> [0] ~e\n");
}

inline quent::GradedImplication goal() {
    return quent::parse_implication("a & b -> [0.3] (~d & e) | (d & ~e)");
}

// Hand-built forest for the goal: root {a,b} (case A), children {b,~b}
// (case C) and {b,c} (case B at 0.3), below which {d} resolves by case A
// and {e} splits on d (case D).
inline quent::ProofForest forest() {
    auto clause = [](const std::string& text) { return quent::parse_clause_text(text); };
    using quent::CaseA;
    using quent::CaseB;
    using quent::CaseC;
    using quent::CaseD;
    using quent::Degree;
    std::vector<quent::ForestNode> nodes;
    auto add = [&](int id, const char* label, std::optional<int> parent, Degree w,
                   std::optional<quent::Justification> just) {
        quent::ForestNode n;
        n.id = id;
        if (std::string(label) == "*")
            n.improper = true;
        else
            n.clause = clause(label);
        n.parent = parent;
        n.inWeight = std::move(w);
        n.justification = std::move(just);
        nodes.push_back(std::move(n));
    };
    Degree zero = Degree::zero();
    Degree weight = Degree::fraction(3, 10);
    add(0, "{a,b}", std::nullopt, zero, CaseA{0});
    add(1, "{b,~b}", 0, zero, CaseC{});
    add(2, "*", 1, zero, std::nullopt);
    add(3, "{b,c}", 0, zero, CaseB{1});
    add(4, "{d}", 3, weight, CaseD{quent::Variable{"e"}});
    add(5, "{d,e}", 4, zero, CaseA{2});
    add(6, "{d,e,~e}", 5, zero, CaseC{});
    add(7, "*", 6, zero, std::nullopt);
    add(8, "{d,~e}", 4, zero, std::nullopt);
    add(9, "{e}", 3, weight, CaseD{quent::Variable{"d"}});
    add(10, "{d,e}", 9, zero, CaseA{2});
    add(11, "{d,e,~e}", 10, zero, CaseC{});
    add(12, "*", 11, zero, std::nullopt);
    add(13, "{~d,e}", 9, zero, std::nullopt);
    return quent::ProofForest(std::move(nodes));
}

}  // namespace worked

#endif
