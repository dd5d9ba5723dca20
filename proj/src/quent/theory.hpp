#ifndef QUENT_THEORY_HPP
#define QUENT_THEORY_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "quent/degree.hpp"
#include "quent/formula.hpp"

namespace quent {

// alpha ->[d] beta with a finite nonnegative degree d.
struct GradedImplication {
    Formula antecedent;
    Formula consequent;
    Degree degree;

    bool operator==(const GradedImplication& rhs) const {
        return antecedent == rhs.antecedent && consequent == rhs.consequent && degree == rhs.degree;
    }

    std::string str() const;
};

// Implications kept as a sequence so reports can cite them by index.
struct Theory {
    std::vector<GradedImplication> implications;

    std::size_t size() const { return implications.size(); }
    std::set<Variable> variables() const;
};

// Normal form: one consistent nonempty antecedent clause, a set of
// consistent nonempty consequent clauses (possibly empty, meaning bottom).
class BasicImplication {
public:
    BasicImplication(Clause antecedent, ClauseSet consequent, Degree degree);

    const Clause& antecedent() const { return ant_; }
    const ClauseSet& consequent() const { return cons_; }
    const Degree& degree() const { return deg_; }

    GradedImplication flatten() const;

private:
    Clause ant_;
    ClauseSet cons_;
    Degree deg_;
};

struct BasicTheory {
    std::vector<BasicImplication> implications;

    std::size_t size() const { return implications.size(); }
    std::set<Variable> variables() const;
};

struct BasicConversion {
    BasicTheory theory;
    // source[i] = index of the theory implication implications[i] came from
    std::vector<std::size_t> source;
};

// Drops implications whose antecedent is unsatisfiable or whose consequent
// is a tautology, splits the rest per antecedent clause. An antecedent
// equivalent to top is expanded over a case split on the first consequent
// variable (or a fresh one).
BasicConversion to_basic_theory(const Theory& t);

Theory flatten(const BasicTheory& tb);

std::string render_theory(const Theory& t);

// Sums of all sub-multisets of the theory's degrees, deduplicated and
// sorted; optionally capped at `limit` (sums above it are discarded).
std::vector<Degree> submultiset_sums(const BasicTheory& tb, const Degree* limit = nullptr);

}  // namespace quent

#endif
