#include "quent/space.hpp"

#include <cmath>
#include <sstream>

#include "quent/parser.hpp"

namespace quent {

WorldSet WorldSet::full(std::size_t n) {
    WorldSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i);
    return s;
}

bool WorldSet::empty() const {
    for (auto b : bits_)
        if (b) return false;
    return true;
}

std::size_t WorldSet::count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) ++c;
    return c;
}

WorldSet WorldSet::unionWith(const WorldSet& o) const {
    WorldSet s(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] | o.bits_[i];
    return s;
}

WorldSet WorldSet::intersectWith(const WorldSet& o) const {
    WorldSet s(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] & o.bits_[i];
    return s;
}

WorldSet WorldSet::complement() const {
    WorldSet s(n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!test(i)) s.set(i);
    return s;
}

bool WorldSet::subsetOf(const WorldSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

FiniteQuasimetricSpace::FiniteQuasimetricSpace(std::vector<std::string> worlds)
    : worlds_(std::move(worlds)) {
    const std::size_t n = worlds_.size();
    dist_.assign(n * n, ExtendedDegree::infinity());
    for (std::size_t i = 0; i < n; ++i) dist_[i * n + i] = Degree::zero();
}

std::optional<std::size_t> FiniteQuasimetricSpace::worldIndex(const std::string& name) const {
    for (std::size_t i = 0; i < worlds_.size(); ++i)
        if (worlds_[i] == name) return i;
    return std::nullopt;
}

SpaceValidation validate_space(const FiniteQuasimetricSpace& s) {
    SpaceValidation report;
    const std::size_t n = s.size();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            bool zero = s.dist(v, w).isZero();
            if ((v == w) != zero)
                report.violations.push_back(
                    {"M1", "q(" + s.worlds()[v] + "," + s.worlds()[w] + ") = " +
                               s.dist(v, w).str()});
        }
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t x = 0; x < n; ++x)
                if (s.dist(v, x) > s.dist(v, w) + s.dist(w, x))
                    report.violations.push_back(
                        {"M2", "q(" + s.worlds()[v] + "," + s.worlds()[x] + ") > q(" +
                                   s.worlds()[v] + "," + s.worlds()[w] + ") + q(" + s.worlds()[w] +
                                   "," + s.worlds()[x] + ")"});
    report.ok = report.violations.empty();
    return report;
}

ExtendedDegree point_distance(const FiniteQuasimetricSpace& s, std::size_t a, const WorldSet& B) {
    ExtendedDegree best = ExtendedDegree::infinity();
    for (std::size_t b = 0; b < s.size(); ++b)
        if (B.test(b) && s.dist(a, b) < best) best = s.dist(a, b);
    return best;
}

WorldSet neighbourhood(const FiniteQuasimetricSpace& s, const ExtendedDegree& d,
                       const WorldSet& B) {
    WorldSet out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
        if (point_distance(s, a, B) <= d) out.set(a);
    return out;
}

ExtendedDegree hausdorff(const FiniteQuasimetricSpace& s, const WorldSet& A, const WorldSet& B) {
    ExtendedDegree best = Degree::zero();
    for (std::size_t a = 0; a < s.size(); ++a)
        if (A.test(a)) {
            ExtendedDegree d = point_distance(s, a, B);
            if (d > best) best = d;
        }
    return best;
}

const WorldSet Model::valueOf(const Variable& v) const {
    auto it = valuation.find(v);
    if (it != valuation.end()) return it->second;
    return WorldSet(space.size());
}

WorldSet evaluate(const Model& m, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            return m.valueOf(f.variable());
        case Formula::Kind::Bottom:
            return WorldSet(m.space.size());
        case Formula::Kind::Top:
            return WorldSet::full(m.space.size());
        case Formula::Kind::Not:
            return evaluate(m, f.child()).complement();
        case Formula::Kind::And:
            return evaluate(m, f.left()).intersectWith(evaluate(m, f.right()));
        case Formula::Kind::Or:
            return evaluate(m, f.left()).unionWith(evaluate(m, f.right()));
    }
    return WorldSet(m.space.size());
}

bool satisfies(const Model& m, const GradedImplication& imp) {
    WorldSet a = evaluate(m, imp.antecedent);
    WorldSet b = evaluate(m, imp.consequent);
    return hausdorff(m.space, a, b) <= ExtendedDegree(imp.degree);
}

bool satisfies_all(const Model& m, const Theory& t) {
    for (const auto& imp : t.implications)
        if (!satisfies(m, imp)) return false;
    return true;
}

Model parse_model(const std::string& text) {
    Model m;
    bool haveWorlds = false;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "worlds") {
            if (haveWorlds) throw ParseError("duplicate worlds line", lineNo, 1);
            std::vector<std::string> names;
            std::string w;
            while (ls >> w) {
                for (const auto& seen : names)
                    if (seen == w) throw ParseError("duplicate world '" + w + "'", lineNo, 1);
                names.push_back(w);
            }
            if (names.empty()) throw ParseError("worlds line needs at least one world", lineNo, 1);
            m.space = FiniteQuasimetricSpace(std::move(names));
            haveWorlds = true;
        } else if (head == "q") {
            if (!haveWorlds) throw ParseError("q entry before worlds line", lineNo, 1);
            std::string v, w, d;
            if (!(ls >> v >> w >> d)) throw ParseError("malformed q entry", lineNo, 1);
            auto vi = m.space.worldIndex(v);
            auto wi = m.space.worldIndex(w);
            if (!vi || !wi) throw ParseError("unknown world in q entry", lineNo, 1);
            auto deg = ExtendedDegree::parse(d);
            if (!deg) throw ParseError("malformed degree '" + d + "'", lineNo, 1);
            m.space.setDist(*vi, *wi, *deg);
        } else if (head == "var") {
            if (!haveWorlds) throw ParseError("var entry before worlds line", lineNo, 1);
            std::string name, colon;
            if (!(ls >> name >> colon) || colon != ":")
                throw ParseError("malformed var entry", lineNo, 1);
            WorldSet set(m.space.size());
            std::string w;
            while (ls >> w) {
                auto wi = m.space.worldIndex(w);
                if (!wi) throw ParseError("unknown world '" + w + "' in var entry", lineNo, 1);
                set.set(*wi);
            }
            m.valuation[Variable{name}] = set;
        } else {
            throw ParseError("unknown directive '" + head + "'", lineNo, 1);
        }
    }
    if (!haveWorlds) throw ParseError("missing worlds line", lineNo ? lineNo : 1, 1);
    return m;
}

std::string render_model(const Model& m) {
    std::string out = "worlds";
    for (const auto& w : m.space.worlds()) out += " " + w;
    out += "\n";
    for (std::size_t v = 0; v < m.space.size(); ++v)
        for (std::size_t w = 0; w < m.space.size(); ++w) {
            if (v == w || m.space.dist(v, w).isInf()) continue;  // defaults
            out += "q " + m.space.worlds()[v] + " " + m.space.worlds()[w] + " " +
                   m.space.dist(v, w).str() + "\n";
        }
    for (const auto& [var, set] : m.valuation) {
        out += "var " + var.name + " :";
        for (std::size_t i = 0; i < m.space.size(); ++i)
            if (set.test(i)) out += " " + m.space.worlds()[i];
        out += "\n";
    }
    return out;
}

namespace {
constexpr unsigned long kApproxGrid = 1000000000000UL;  // 1e12
}

ApproxDegree similarity_to_distance(const Degree& s) {
    if (s > Degree::fromUint(1)) throw std::domain_error("similarity must lie in [0,1]");
    if (s.isZero()) return {ExtendedDegree::infinity(), true};
    if (s == Degree::fromUint(1)) return {ExtendedDegree(Degree::zero()), true};
    // rounded to a 1e-12 grid and marked approximate
    double x = -std::log(s.toDouble());
    auto num = static_cast<unsigned long>(x * static_cast<double>(kApproxGrid) + 0.5);
    return {ExtendedDegree(Degree::fraction(num, kApproxGrid)), false};
}

ApproxSimilarity distance_to_similarity(const ExtendedDegree& d) {
    if (d.isInf()) return {Degree::zero(), true};
    if (d.isZero()) return {Degree::fromUint(1), true};
    double x = std::exp(-d.finite().toDouble());
    auto num = static_cast<unsigned long>(x * static_cast<double>(kApproxGrid) + 0.5);
    return {Degree::fraction(num, kApproxGrid), false};
}

}  // namespace quent
