#ifndef QUENT_SPACE_HPP
#define QUENT_SPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quent/degree.hpp"
#include "quent/formula.hpp"
#include "quent/theory.hpp"

namespace quent {

// Subset of a space's worlds, bitset over world indices.
class WorldSet {
public:
    WorldSet() : n_(0) {}
    explicit WorldSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

    static WorldSet full(std::size_t n);

    std::size_t universeSize() const { return n_; }
    bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool empty() const;
    std::size_t count() const;

    WorldSet unionWith(const WorldSet& o) const;
    WorldSet intersectWith(const WorldSet& o) const;
    WorldSet complement() const;
    bool subsetOf(const WorldSet& o) const;

    bool operator==(const WorldSet&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint64_t> bits_;
};

// Finite set of worlds with a dense extended-degree distance matrix.
// The matrix is data: the M1/M2 axioms are checked by validate_space,
// violations are reported, not thrown.
class FiniteQuasimetricSpace {
public:
    FiniteQuasimetricSpace() = default;
    explicit FiniteQuasimetricSpace(std::vector<std::string> worlds);

    std::size_t size() const { return worlds_.size(); }
    const std::vector<std::string>& worlds() const { return worlds_; }
    std::optional<std::size_t> worldIndex(const std::string& name) const;

    const ExtendedDegree& dist(std::size_t v, std::size_t w) const {
        return dist_[v * size() + w];
    }
    void setDist(std::size_t v, std::size_t w, ExtendedDegree d) {
        dist_[v * size() + w] = std::move(d);
    }

private:
    std::vector<std::string> worlds_;
    std::vector<ExtendedDegree> dist_;  // row-major; diagonal 0, off-diagonal inf by default
};

struct AxiomViolation {
    std::string axiom;  // "M1" or "M2"
    std::string detail;
};

struct SpaceValidation {
    bool ok = true;
    std::vector<AxiomViolation> violations;
};

SpaceValidation validate_space(const FiniteQuasimetricSpace& s);

// inf over b in B of dist(a,b); INF for empty B.
ExtendedDegree point_distance(const FiniteQuasimetricSpace& s, std::size_t a, const WorldSet& B);

// { a : point_distance(a,B) <= d }
WorldSet neighbourhood(const FiniteQuasimetricSpace& s, const ExtendedDegree& d, const WorldSet& B);

// sup over a in A of point_distance(a,B); 0 for empty A.
ExtendedDegree hausdorff(const FiniteQuasimetricSpace& s, const WorldSet& A, const WorldSet& B);

struct Model {
    FiniteQuasimetricSpace space;
    std::map<Variable, WorldSet> valuation;  // missing variables denote the empty set

    const WorldSet valueOf(const Variable& v) const;
};

WorldSet evaluate(const Model& m, const Formula& f);
bool satisfies(const Model& m, const GradedImplication& imp);
bool satisfies_all(const Model& m, const Theory& t);

// Space file format: "worlds w1 w2 ..." first, then "q v w <degree|inf>"
// entries (diagonal defaults to 0, off-diagonal to inf) and
// "var name : w1 w2 ..." valuation lines.
Model parse_model(const std::string& text);
std::string render_model(const Model& m);

// Quasisimilarity <-> quasimetric correspondence s -> -ln s. Approximate
// except at the endpoints; excluded from the exact-arithmetic guarantees.
struct ApproxDegree {
    ExtendedDegree value;
    bool exact = true;
};
ApproxDegree similarity_to_distance(const Degree& s);
// e^-d, in [0,1]; exact at d = 0 and d = inf.
struct ApproxSimilarity {
    Degree value;
    bool exact = true;
};
ApproxSimilarity distance_to_similarity(const ExtendedDegree& d);

}  // namespace quent

#endif
