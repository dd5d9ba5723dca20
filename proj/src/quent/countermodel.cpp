#include "quent/countermodel.hpp"

#include <algorithm>
#include <set>

#include "quent/errors.hpp"

namespace quent {

std::vector<Degree> default_degree_pool(const Theory& t, const GradedImplication& goal) {
    std::set<Degree> pool;
    pool.insert(Degree::zero());
    pool.insert(goal.degree);
    // sums of sub-multisets of theory degrees, capped at the goal degree,
    // plus the smallest sum strictly above it (or goal degree + 1)
    std::set<Degree> sums{Degree::zero()};
    std::optional<Degree> above;
    for (const auto& imp : t.implications) {
        std::set<Degree> next = sums;
        for (const auto& s : sums) {
            Degree c = s + imp.degree;
            if (c <= goal.degree) {
                next.insert(c);
            } else if (!above || c < *above) {
                above = c;
            }
        }
        sums = std::move(next);
    }
    pool.insert(sums.begin(), sums.end());
    pool.insert(above ? *above : goal.degree + Degree::fromUint(1));
    return std::vector<Degree>(pool.begin(), pool.end());
}

namespace {

struct Searcher {
    const Theory& theory;
    const GradedImplication& goal;
    std::vector<Degree> finitePool;  // strictly positive, ascending
    std::vector<Variable> vars;
    std::size_t budget;
    std::size_t used = 0;

    std::optional<Model> run(std::size_t maxWorlds) {
        for (std::size_t n = 1; n <= maxWorlds; ++n) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i + 1));
            FiniteQuasimetricSpace space(std::move(names));
            std::vector<std::pair<std::size_t, std::size_t>> entries;
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w)
                    if (v != w) entries.emplace_back(v, w);
            if (auto m = assignDistances(space, entries, 0)) return m;
        }
        return std::nullopt;
    }

    // Off-diagonal choices: finite pool values ascending, then inf (the
    // default already present in the matrix).
    std::optional<Model> assignDistances(FiniteQuasimetricSpace& space,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& entries,
                                         std::size_t at) {
        if (at == entries.size()) {
            if (!triangleOk(space)) return std::nullopt;
            return scanValuations(space);
        }
        auto [v, w] = entries[at];
        for (const auto& d : finitePool) {
            space.setDist(v, w, ExtendedDegree(d));
            if (trianglePrefixOk(space, entries, at)) {
                if (auto m = assignDistances(space, entries, at + 1)) return m;
            }
        }
        space.setDist(v, w, ExtendedDegree::infinity());
        if (trianglePrefixOk(space, entries, at)) {
            if (auto m = assignDistances(space, entries, at + 1)) return m;
        }
        return std::nullopt;
    }

    // Check only the triangles all of whose edges are already assigned; the
    // row-major assignment order makes "assigned" a prefix of `entries`.
    bool trianglePrefixOk(const FiniteQuasimetricSpace& space,
                          const std::vector<std::pair<std::size_t, std::size_t>>& entries,
                          std::size_t at) const {
        auto assigned = [&](std::size_t v, std::size_t w) {
            if (v == w) return true;
            for (std::size_t i = 0; i <= at; ++i)
                if (entries[i] == std::make_pair(v, w)) return true;
            return false;
        };
        const std::size_t n = space.size();
        auto [lv, lw] = entries[at];
        // triangles that involve the newly assigned edge
        for (std::size_t x = 0; x < n; ++x) {
            if (assigned(lv, x) && assigned(lw, x) &&
                space.dist(lv, x) > space.dist(lv, lw) + space.dist(lw, x))
                return false;
            if (assigned(x, lv) && assigned(x, lw) &&
                space.dist(x, lw) > space.dist(x, lv) + space.dist(lv, lw))
                return false;
        }
        return true;
    }

    bool triangleOk(const FiniteQuasimetricSpace& space) const {
        const std::size_t n = space.size();
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t x = 0; x < n; ++x)
                    if (space.dist(v, x) > space.dist(v, w) + space.dist(w, x)) return false;
        return true;
    }

    std::optional<Model> scanValuations(const FiniteQuasimetricSpace& space) {
        const std::size_t n = space.size();
        const std::size_t k = vars.size();
        if (n >= 63) throw BudgetError("countermodel: world count too large");
        const std::uint64_t subsets = std::uint64_t{1} << n;
        std::vector<std::uint64_t> choice(k, 0);
        while (true) {
            if (++used > budget) throw BudgetError("countermodel: search budget exhausted");
            Model m;
            m.space = space;
            for (std::size_t i = 0; i < k; ++i) {
                WorldSet set(n);
                for (std::size_t b = 0; b < n; ++b)
                    if ((choice[i] >> b) & 1) set.set(b);
                m.valuation[vars[i]] = set;
            }
            if (satisfies_all(m, theory) && !satisfies(m, goal)) return m;
            // advance the valuation counter, last variable fastest
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (++choice[i] < subsets) break;
                choice[i] = 0;
                if (i == 0) return std::nullopt;
            }
            if (k == 0) return std::nullopt;
        }
    }
};

}  // namespace

std::optional<Model> find_countermodel(const Theory& t, const GradedImplication& goal,
                                       const CountermodelOptions& opts) {
    if (opts.maxWorlds < 1) throw std::invalid_argument("find_countermodel: maxWorlds must be >= 1");
    Searcher s{t, goal, {}, {}, opts.budget};

    std::vector<Degree> pool = opts.degreePool.empty() ? default_degree_pool(t, goal) : opts.degreePool;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (const auto& d : pool)
        if (!d.isZero()) s.finitePool.push_back(d);  // off-diagonal distances must be positive

    std::set<Variable> vs = t.variables();
    auto gv1 = goal.antecedent.variables();
    auto gv2 = goal.consequent.variables();
    vs.insert(gv1.begin(), gv1.end());
    vs.insert(gv2.begin(), gv2.end());
    s.vars.assign(vs.begin(), vs.end());

    return s.run(opts.maxWorlds);
}

}  // namespace quent
