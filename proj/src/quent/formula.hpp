#ifndef QUENT_FORMULA_HPP
#define QUENT_FORMULA_HPP

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace quent {

// Propositional variable, compared and ordered by name.
struct Variable {
    std::string name;

    auto operator<=>(const Variable&) const = default;
};

struct Literal {
    Variable var;
    bool positive = true;

    Literal() = default;
    Literal(Variable v, bool pos) : var(std::move(v)), positive(pos) {}
    Literal negated() const { return Literal(var, !positive); }

    // Canonical order: by variable name, positive before negative.
    auto operator<=>(const Literal& rhs) const {
        if (auto c = var <=> rhs.var; c != 0) return c;
        return (positive ? 0 : 1) <=> (rhs.positive ? 0 : 1);
    }
    bool operator==(const Literal&) const = default;

    std::string str() const { return positive ? var.name : "~" + var.name; }
};

// Finite set of literals, read conjunctively. Kept sorted and duplicate-free.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);

    static Clause empty() { return Clause(); }
    static Clause single(Literal l) { return Clause({std::move(l)}); }

    const std::vector<Literal>& literals() const { return lits_; }
    bool isEmpty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }

    bool contains(const Literal& l) const;
    bool containsVariable(const Variable& v) const;
    // A clause is inconsistent iff it contains both polarities of a variable.
    bool consistent() const;
    bool subsetOf(const Clause& other) const;

    Clause withLiteral(const Literal& l) const;
    Clause withoutLiteral(const Literal& l) const;
    Clause unionWith(const Clause& other) const;

    auto operator<=>(const Clause&) const = default;

    // "{a,~b}", literals in canonical order; "{}" for the empty clause.
    std::string str() const;

private:
    std::vector<Literal> lits_;
};

// Finite set of clauses, read disjunctively (a DNF). Sorted, duplicate-free.
class ClauseSet {
public:
    ClauseSet() = default;
    explicit ClauseSet(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return cls_; }
    bool isEmpty() const { return cls_.empty(); }
    std::size_t size() const { return cls_.size(); }
    bool contains(const Clause& c) const;

    auto operator<=>(const ClauseSet&) const = default;

    std::string str() const;

private:
    std::vector<Clause> cls_;
};

// Immutable Boolean formula tree. Copies share structure.
class Formula {
public:
    enum class Kind { Var, Bottom, Top, And, Or, Not };

    Formula() : Formula(bottom()) {}

    static Formula var(Variable v);
    static Formula var(const std::string& name) { return var(Variable{name}); }
    static Formula bottom();
    static Formula top();
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula neg(Formula f);
    // Material implication, encoded as ~lhs | rhs.
    static Formula implies(Formula lhs, Formula rhs);

    Kind kind() const { return node_->kind; }
    const Variable& variable() const { return node_->var; }
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }
    Formula child() const { return Formula(node_->left); }

    // Structural (syntactic) equality.
    bool operator==(const Formula& rhs) const;

    std::set<Variable> variables() const;

    // Minimal-parenthesis rendering that reparses to the identical tree.
    std::string str() const;

private:
    struct Node {
        Kind kind;
        Variable var;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;

        explicit Node(Kind k) : kind(k) {}
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// Polarities with which a variable occurs in a formula (by parity of
// enclosing negations).
struct PolarityOccurrence {
    bool positive = false;
    bool negative = false;
};
PolarityOccurrence polarity_of(const Formula& f, const Variable& v);

// Exact decision over the formula's variable set.
bool is_tautology(const Formula& f);
bool is_satisfiable(const Formula& f);
bool boolean_equivalent(const Formula& f1, const Formula& f2);

// Canonical standard clause set: a DNF equivalent of f whose literal
// polarities all occur in f, with inconsistent and subsumed clauses removed.
ClauseSet standard_clause_set(const Formula& f);

// f(B): disjunction of conjunctions, empty conjunction = top, empty
// disjunction = bottom, built in canonical order.
Formula clause_set_formula(const ClauseSet& b);
Formula clause_formula(const Clause& c);

}  // namespace quent

#endif
