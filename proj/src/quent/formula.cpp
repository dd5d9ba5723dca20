#include "quent/formula.hpp"

#include <algorithm>
#include <map>

namespace quent {

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::containsVariable(const Variable& v) const {
    return contains(Literal(v, true)) || contains(Literal(v, false));
}

bool Clause::consistent() const {
    for (std::size_t i = 1; i < lits_.size(); ++i)
        if (lits_[i - 1].var == lits_[i].var) return false;
    return true;
}

bool Clause::subsetOf(const Clause& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

Clause Clause::withLiteral(const Literal& l) const {
    auto lits = lits_;
    lits.push_back(l);
    return Clause(std::move(lits));
}

Clause Clause::withoutLiteral(const Literal& l) const {
    std::vector<Literal> lits;
    lits.reserve(lits_.size());
    for (const auto& x : lits_)
        if (!(x == l)) lits.push_back(x);
    return Clause(std::move(lits));
}

Clause Clause::unionWith(const Clause& other) const {
    auto lits = lits_;
    lits.insert(lits.end(), other.lits_.begin(), other.lits_.end());
    return Clause(std::move(lits));
}

std::string Clause::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < lits_.size(); ++i) {
        if (i) out += ",";
        out += lits_[i].str();
    }
    out += "}";
    return out;
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) : cls_(std::move(clauses)) {
    std::sort(cls_.begin(), cls_.end());
    cls_.erase(std::unique(cls_.begin(), cls_.end()), cls_.end());
}

bool ClauseSet::contains(const Clause& c) const {
    return std::binary_search(cls_.begin(), cls_.end(), c);
}

std::string ClauseSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < cls_.size(); ++i) {
        if (i) out += " ";
        out += cls_[i].str();
    }
    out += "}";
    return out;
}

Formula Formula::var(Variable v) {
    auto n = std::make_shared<Node>(Kind::Var);
    n->var = std::move(v);
    return Formula(std::move(n));
}

Formula Formula::bottom() {
    static const auto n = std::make_shared<Node>(Kind::Bottom);
    return Formula(n);
}

Formula Formula::top() {
    static const auto n = std::make_shared<Node>(Kind::Top);
    return Formula(n);
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>(Kind::And);
    n->left = std::move(lhs.node_);
    n->right = std::move(rhs.node_);
    return Formula(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>(Kind::Or);
    n->left = std::move(lhs.node_);
    n->right = std::move(rhs.node_);
    return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
    auto n = std::make_shared<Node>(Kind::Not);
    n->left = std::move(f.node_);
    return Formula(std::move(n));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return disj(neg(std::move(lhs)), std::move(rhs));
}

bool Formula::operator==(const Formula& rhs) const {
    if (node_ == rhs.node_) return true;
    if (node_->kind != rhs.node_->kind) return false;
    switch (node_->kind) {
        case Kind::Var:
            return node_->var == rhs.node_->var;
        case Kind::Bottom:
        case Kind::Top:
            return true;
        case Kind::Not:
            return left() == rhs.left();
        case Kind::And:
        case Kind::Or:
            return left() == rhs.left() && right() == rhs.right();
    }
    return false;
}

namespace {

void collectVars(const Formula& f, std::set<Variable>& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            out.insert(f.variable());
            break;
        case Formula::Kind::Bottom:
        case Formula::Kind::Top:
            break;
        case Formula::Kind::Not:
            collectVars(f.child(), out);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            collectVars(f.left(), out);
            collectVars(f.right(), out);
            break;
    }
}

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Or:
            return 1;
        case Formula::Kind::And:
            return 2;
        case Formula::Kind::Not:
            return 3;
        default:
            return 4;
    }
}

// minPrec mirrors the grammar's left associativity so that the rendering
// reparses to the identical tree.
std::string render(const Formula& f, int minPrec) {
    std::string s;
    switch (f.kind()) {
        case Formula::Kind::Var:
            s = f.variable().name;
            break;
        case Formula::Kind::Bottom:
            s = "0";
            break;
        case Formula::Kind::Top:
            s = "1";
            break;
        case Formula::Kind::Not:
            s = "~" + render(f.child(), 3);
            break;
        case Formula::Kind::And:
            s = render(f.left(), 2) + " & " + render(f.right(), 3);
            break;
        case Formula::Kind::Or:
            s = render(f.left(), 1) + " | " + render(f.right(), 2);
            break;
    }
    if (precedence(f.kind()) < minPrec) s = "(" + s + ")";
    return s;
}

bool evalUnder(const Formula& f, const std::map<Variable, bool>& assignment) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            return assignment.at(f.variable());
        case Formula::Kind::Bottom:
            return false;
        case Formula::Kind::Top:
            return true;
        case Formula::Kind::Not:
            return !evalUnder(f.child(), assignment);
        case Formula::Kind::And:
            return evalUnder(f.left(), assignment) && evalUnder(f.right(), assignment);
        case Formula::Kind::Or:
            return evalUnder(f.left(), assignment) || evalUnder(f.right(), assignment);
    }
    return false;
}

}  // namespace

std::set<Variable> Formula::variables() const {
    std::set<Variable> out;
    collectVars(*this, out);
    return out;
}

std::string Formula::str() const { return render(*this, 1); }

PolarityOccurrence polarity_of(const Formula& f, const Variable& v) {
    PolarityOccurrence out;
    // walk with negation parity
    struct Walker {
        const Variable& v;
        PolarityOccurrence& out;
        void walk(const Formula& f, bool positive) {
            switch (f.kind()) {
                case Formula::Kind::Var:
                    if (f.variable() == v) {
                        if (positive)
                            out.positive = true;
                        else
                            out.negative = true;
                    }
                    break;
                case Formula::Kind::Bottom:
                case Formula::Kind::Top:
                    break;
                case Formula::Kind::Not:
                    walk(f.child(), !positive);
                    break;
                case Formula::Kind::And:
                case Formula::Kind::Or:
                    walk(f.left(), positive);
                    walk(f.right(), positive);
                    break;
            }
        }
    } w{v, out};
    w.walk(f, true);
    return out;
}

bool is_tautology(const Formula& f) {
    const std::set<Variable> varSet = f.variables();
    const std::vector<Variable> vars(varSet.begin(), varSet.end());
    std::map<Variable, bool> assignment;
    // Exhaustive over the formula's variable set; formulas in this domain
    // stay small, so plain enumeration is complete and fast enough.
    const std::size_t n = vars.size();
    if (n >= 8 * sizeof(std::size_t)) throw std::invalid_argument("is_tautology: too many variables");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) assignment[vars[i]] = (mask >> i) & 1;
        if (!evalUnder(f, assignment)) return false;
    }
    return true;
}

bool is_satisfiable(const Formula& f) { return !is_tautology(Formula::neg(f)); }

bool boolean_equivalent(const Formula& f1, const Formula& f2) {
    return is_tautology(Formula::implies(f1, f2)) && is_tautology(Formula::implies(f2, f1));
}

namespace {

// DNF of f (positive) resp. ~f (negative), with inconsistent clauses dropped
// as they arise. Literal polarities match occurrence polarities in f.
std::vector<Clause> dnf(const Formula& f, bool positive) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            return {Clause::single(Literal(f.variable(), positive))};
        case Formula::Kind::Bottom:
            return positive ? std::vector<Clause>{} : std::vector<Clause>{Clause::empty()};
        case Formula::Kind::Top:
            return positive ? std::vector<Clause>{Clause::empty()} : std::vector<Clause>{};
        case Formula::Kind::Not:
            return dnf(f.child(), !positive);
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            bool product = (f.kind() == Formula::Kind::And) == positive;
            auto l = dnf(f.left(), positive);
            auto r = dnf(f.right(), positive);
            if (!product) {
                l.insert(l.end(), r.begin(), r.end());
                return l;
            }
            std::vector<Clause> out;
            for (const auto& a : l)
                for (const auto& b : r) {
                    Clause u = a.unionWith(b);
                    if (u.consistent()) out.push_back(std::move(u));
                }
            return out;
        }
    }
    return {};
}

std::vector<Clause> removeSubsumed(std::vector<Clause> clauses) {
    std::sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Clause> kept;
    for (const auto& c : clauses) {
        bool subsumed = false;
        for (const auto& k : kept)
            if (k.subsetOf(c)) {
                subsumed = true;
                break;
            }
        if (!subsumed) kept.push_back(c);
    }
    return kept;
}

}  // namespace

ClauseSet standard_clause_set(const Formula& f) {
    return ClauseSet(removeSubsumed(dnf(f, true)));
}

Formula clause_formula(const Clause& c) {
    if (c.isEmpty()) return Formula::top();
    Formula out;
    bool first = true;
    for (const auto& l : c.literals()) {
        Formula lit = l.positive ? Formula::var(l.var) : Formula::neg(Formula::var(l.var));
        out = first ? lit : Formula::conj(out, lit);
        first = false;
    }
    return out;
}

Formula clause_set_formula(const ClauseSet& b) {
    if (b.isEmpty()) return Formula::bottom();
    Formula out;
    bool first = true;
    for (const auto& c : b.clauses()) {
        Formula cf = clause_formula(c);
        out = first ? cf : Formula::disj(out, cf);
        first = false;
    }
    return out;
}

}  // namespace quent
