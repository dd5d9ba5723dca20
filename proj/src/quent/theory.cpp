#include "quent/theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace quent {

std::string GradedImplication::str() const {
    return antecedent.str() + " -> [" + degree.str() + "] " + consequent.str();
}

std::set<Variable> Theory::variables() const {
    std::set<Variable> out;
    for (const auto& imp : implications) {
        auto a = imp.antecedent.variables();
        auto c = imp.consequent.variables();
        out.insert(a.begin(), a.end());
        out.insert(c.begin(), c.end());
    }
    return out;
}

BasicImplication::BasicImplication(Clause antecedent, ClauseSet consequent, Degree degree)
    : ant_(std::move(antecedent)), cons_(std::move(consequent)), deg_(std::move(degree)) {
    if (ant_.isEmpty() || !ant_.consistent())
        throw std::invalid_argument("BasicImplication: antecedent must be a nonempty consistent clause");
    for (const auto& c : cons_.clauses())
        if (c.isEmpty() || !c.consistent())
            throw std::invalid_argument("BasicImplication: consequent clauses must be nonempty and consistent");
}

GradedImplication BasicImplication::flatten() const {
    return GradedImplication{clause_formula(ant_), clause_set_formula(cons_), deg_};
}

std::set<Variable> BasicTheory::variables() const {
    std::set<Variable> out;
    for (const auto& imp : implications) {
        for (const auto& l : imp.antecedent().literals()) out.insert(l.var);
        for (const auto& c : imp.consequent().clauses())
            for (const auto& l : c.literals()) out.insert(l.var);
    }
    return out;
}

namespace {

Variable freshSplitVariable(const std::set<Variable>& taken) {
    for (int i = 0;; ++i) {
        Variable v{"_t" + std::to_string(i)};
        if (!taken.count(v)) return v;
    }
}

}  // namespace

BasicConversion to_basic_theory(const Theory& t) {
    BasicConversion out;
    std::set<Variable> allVars = t.variables();
    for (std::size_t idx = 0; idx < t.implications.size(); ++idx) {
        const auto& imp = t.implications[idx];
        if (is_tautology(Formula::neg(imp.antecedent)) || is_tautology(imp.consequent))
            continue;  // derivable by R1 and R3 alone
        ClauseSet antSet = standard_clause_set(imp.antecedent);
        ClauseSet consSet = standard_clause_set(imp.consequent);
        // After the tautology check every consequent clause is nonempty and
        // consistent, and antSet is nonempty.
        std::vector<Clause> antClauses;
        if (antSet.size() == 1 && antSet.clauses()[0].isEmpty()) {
            // Antecedent equivalent to top: expand over a case split so the
            // basic form's n >= 1 holds.
            auto consVars = imp.consequent.variables();
            Variable phi = consVars.empty() ? freshSplitVariable(allVars) : *consVars.begin();
            antClauses.push_back(Clause::single(Literal(phi, true)));
            antClauses.push_back(Clause::single(Literal(phi, false)));
        } else {
            antClauses = antSet.clauses();
        }
        for (const auto& k : antClauses) {
            out.theory.implications.emplace_back(k, consSet, imp.degree);
            out.source.push_back(idx);
        }
    }
    return out;
}

Theory flatten(const BasicTheory& tb) {
    Theory t;
    t.implications.reserve(tb.size());
    for (const auto& b : tb.implications) t.implications.push_back(b.flatten());
    return t;
}

std::string render_theory(const Theory& t) {
    std::string out;
    for (const auto& imp : t.implications) {
        out += imp.str();
        out += "\n";
    }
    return out;
}

std::vector<Degree> submultiset_sums(const BasicTheory& tb, const Degree* limit) {
    std::set<Degree> sums;
    sums.insert(Degree::zero());
    for (const auto& imp : tb.implications) {
        std::set<Degree> next = sums;
        for (const auto& s : sums) {
            Degree candidate = s + imp.degree();
            if (limit && candidate > *limit) continue;
            next.insert(candidate);
        }
        sums = std::move(next);
    }
    return std::vector<Degree>(sums.begin(), sums.end());
}

}  // namespace quent
