#include "quent/rule_proof.hpp"

#include <sstream>

#include "quent/parser.hpp"

namespace quent {
namespace {

struct Checker {
    const RuleProof& p;
    const Theory& t;
    CalculusVariant variant;
    ProofReport report;

    void complain(std::size_t step, const std::string& msg) {
        report.violations.push_back({step, msg});
    }

    bool premiseOk(std::size_t step, std::size_t premise) {
        if (premise >= step) {
            complain(step, "premise index " + std::to_string(premise) +
                               " is not smaller than the step index");
            return false;
        }
        return true;
    }

    const GradedImplication& at(std::size_t i) { return p.steps[i].conclusion; }

    void run() {
        for (std::size_t i = 0; i < p.steps.size(); ++i) check(i);
        report.ok = report.violations.empty();
    }

    void check(std::size_t i) {
        const GradedImplication& c = p.steps[i].conclusion;
        const RuleJustification& j = p.steps[i].justification;

        if (const RAxiom* ax = std::get_if<RAxiom>(&j)) {
            if (ax->theoryIndex >= t.size()) {
                complain(i, "axiom index " + std::to_string(ax->theoryIndex) + " out of range");
                return;
            }
            if (!(c == t.implications[ax->theoryIndex]))
                complain(i, "conclusion differs from theory implication " +
                                std::to_string(ax->theoryIndex));
        } else if (std::get_if<R1>(&j)) {
            if (!c.degree.isZero()) complain(i, "R1 concludes at degree 0");
            if (!is_tautology(Formula::implies(c.antecedent, c.consequent)))
                complain(i, "R1 side condition fails: antecedent -> consequent is not a tautology");
        } else if (const R2* r = std::get_if<R2>(&j)) {
            if (!premiseOk(i, r->premise)) return;
            const GradedImplication& prem = at(r->premise);
            if (!prem.degree.isZero()) complain(i, "R2 premise must have degree 0");
            if (!c.degree.isZero()) complain(i, "R2 concludes at degree 0");
            if (!(c.antecedent == Formula::conj(prem.antecedent, r->gamma)))
                complain(i, "R2 antecedent is not premise antecedent & gamma");
            if (!(c.consequent == Formula::conj(prem.consequent, r->gamma)))
                complain(i, "R2 consequent is not premise consequent & gamma");
        } else if (const R3* r = std::get_if<R3>(&j)) {
            if (variant == CalculusVariant::SmallestWeight) {
                complain(i, "R3 is not part of the smallest-weight calculus");
                return;
            }
            if (!premiseOk(i, r->premise)) return;
            const GradedImplication& prem = at(r->premise);
            if (!(c.antecedent == prem.antecedent) || !(c.consequent == prem.consequent))
                complain(i, "R3 must keep the premise formulas");
            if (c.degree < prem.degree) complain(i, "R3 cannot lower the degree");
        } else if (const R4* r = std::get_if<R4>(&j)) {
            if (!premiseOk(i, r->premise)) return;
            const GradedImplication& prem = at(r->premise);
            if (!(prem.consequent == Formula::bottom()))
                complain(i, "R4 premise consequent must be 0");
            if (!(c.consequent == Formula::bottom())) complain(i, "R4 consequent must be 0");
            if (!(c.antecedent == prem.antecedent)) complain(i, "R4 must keep the antecedent");
            if (!c.degree.isZero()) complain(i, "R4 concludes at degree 0");
        } else if (const R5* r = std::get_if<R5>(&j)) {
            if (!premiseOk(i, r->premise1) || !premiseOk(i, r->premise2)) return;
            const GradedImplication& p1 = at(r->premise1);
            const GradedImplication& p2 = at(r->premise2);
            if (!(p1.consequent == p2.consequent)) complain(i, "R5 premises must share the consequent");
            if (!(c.consequent == p1.consequent)) complain(i, "R5 must keep the consequent");
            if (!(c.antecedent == Formula::disj(p1.antecedent, p2.antecedent)))
                complain(i, "R5 antecedent is not the disjunction of the premise antecedents");
            if (variant == CalculusVariant::Standard) {
                if (!(p1.degree == p2.degree)) complain(i, "R5 premises must share the degree");
                if (!(c.degree == p1.degree)) complain(i, "R5 must keep the degree");
            } else {
                if (!(c.degree == max(p1.degree, p2.degree)))
                    complain(i, "R5' concludes at the maximum of the premise degrees");
            }
        } else if (const R6* r = std::get_if<R6>(&j)) {
            if (!premiseOk(i, r->premise1) || !premiseOk(i, r->premise2)) return;
            const GradedImplication& p1 = at(r->premise1);
            const GradedImplication& p2 = at(r->premise2);
            if (!(p1.consequent == p2.antecedent))
                complain(i, "R6 middle formulas must coincide syntactically");
            if (!(c.antecedent == p1.antecedent)) complain(i, "R6 must keep the first antecedent");
            if (!(c.consequent == p2.consequent)) complain(i, "R6 must keep the second consequent");
            if (!(c.degree == p1.degree + p2.degree))
                complain(i, "R6 concludes at the sum of the premise degrees");
        }
    }
};

}  // namespace

ProofReport check_rule_proof(const RuleProof& p, const Theory& t, CalculusVariant variant) {
    Checker c{p, t, variant, {}};
    c.run();
    return c.report;
}

RuleProof to_smallest_weight(const RuleProof& p) {
    RuleProof out;
    std::vector<std::size_t> remap(p.steps.size());
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const RuleStep& s = p.steps[i];
        if (const R3* r = std::get_if<R3>(&s.justification)) {
            remap[i] = remap[r->premise];  // drop the lift
            continue;
        }
        RuleStep ns = s;
        std::visit(
            [&](auto& j) {
                using T = std::decay_t<decltype(j)>;
                if constexpr (std::is_same_v<T, R2>) {
                    j.premise = remap[j.premise];
                    ns.conclusion.degree = Degree::zero();
                } else if constexpr (std::is_same_v<T, R4>) {
                    j.premise = remap[j.premise];
                    ns.conclusion.degree = Degree::zero();
                } else if constexpr (std::is_same_v<T, R5>) {
                    j.premise1 = remap[j.premise1];
                    j.premise2 = remap[j.premise2];
                    ns.conclusion.degree = max(out.steps[j.premise1].conclusion.degree,
                                               out.steps[j.premise2].conclusion.degree);
                } else if constexpr (std::is_same_v<T, R6>) {
                    j.premise1 = remap[j.premise1];
                    j.premise2 = remap[j.premise2];
                    ns.conclusion.degree = out.steps[j.premise1].conclusion.degree +
                                           out.steps[j.premise2].conclusion.degree;
                }
            },
            ns.justification);
        remap[i] = out.steps.size();
        out.steps.push_back(std::move(ns));
    }
    // dropping a trailing R3 may leave another step last; restate the mapped
    // conclusion so the proof still ends with it
    if (!p.steps.empty() && remap[p.steps.size() - 1] + 1 != out.steps.size())
        out.steps.push_back(out.steps[remap[p.steps.size() - 1]]);
    return out;
}

RuleProof from_smallest_weight(const RuleProof& p) {
    RuleProof out;
    std::vector<std::size_t> remap(p.steps.size());
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        RuleStep ns = p.steps[i];
        if (R5* r = std::get_if<R5>(&ns.justification)) {
            std::size_t a = remap[r->premise1];
            std::size_t b = remap[r->premise2];
            const Degree target = max(out.steps[a].conclusion.degree,
                                      out.steps[b].conclusion.degree);
            auto lift = [&](std::size_t premise) {
                if (out.steps[premise].conclusion.degree == target) return premise;
                GradedImplication lifted = out.steps[premise].conclusion;
                lifted.degree = target;
                out.steps.push_back({std::move(lifted), R3{premise}});
                return out.steps.size() - 1;
            };
            r->premise1 = lift(a);
            r->premise2 = lift(b);
        } else {
            std::visit(
                [&](auto& j) {
                    using T = std::decay_t<decltype(j)>;
                    if constexpr (std::is_same_v<T, R2> || std::is_same_v<T, R3> ||
                                  std::is_same_v<T, R4>)
                        j.premise = remap[j.premise];
                    else if constexpr (std::is_same_v<T, R6>) {
                        j.premise1 = remap[j.premise1];
                        j.premise2 = remap[j.premise2];
                    }
                },
                ns.justification);
        }
        remap[i] = out.steps.size();
        out.steps.push_back(std::move(ns));
    }
    return out;
}

namespace {

std::string renderJust(const RuleJustification& j) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, RAxiom>)
                return "axiom " + std::to_string(r.theoryIndex);
            else if constexpr (std::is_same_v<T, R1>)
                return "r1";
            else if constexpr (std::is_same_v<T, R2>)
                return "r2 " + std::to_string(r.premise) + " gamma=" + r.gamma.str();
            else if constexpr (std::is_same_v<T, R3>)
                return "r3 " + std::to_string(r.premise);
            else if constexpr (std::is_same_v<T, R4>)
                return "r4 " + std::to_string(r.premise);
            else if constexpr (std::is_same_v<T, R5>)
                return "r5 " + std::to_string(r.premise1) + " " + std::to_string(r.premise2);
            else
                return "r6 " + std::to_string(r.premise1) + " " + std::to_string(r.premise2);
        },
        j);
}

}  // namespace

RuleProof parse_rule_proof(const std::string& text) {
    RuleProof out;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;

        auto colon = line.find(':');
        auto semi = line.find(';');
        if (colon == std::string::npos || semi == std::string::npos || semi < colon)
            throw ParseError("expected '<idx>: <implication> ; <rule>'", lineNo, 1);
        std::size_t idx = 0;
        try {
            idx = static_cast<std::size_t>(std::stoul(line.substr(0, colon)));
        } catch (...) {
            throw ParseError("malformed step index", lineNo, 1);
        }
        if (idx != out.steps.size())
            throw ParseError("step index " + std::to_string(idx) + " out of order", lineNo, 1);

        RuleStep step;
        try {
            step.conclusion = parse_implication(line.substr(colon + 1, semi - colon - 1));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), lineNo, e.column());
        }

        std::istringstream js(line.substr(semi + 1));
        std::string rule;
        js >> rule;
        auto needIndex = [&](const std::string& what) {
            long long v = -1;
            if (!(js >> v) || v < 0) throw ParseError("malformed " + what, lineNo, 1);
            return static_cast<std::size_t>(v);
        };
        if (rule == "axiom") {
            step.justification = RAxiom{needIndex("axiom index")};
        } else if (rule == "r1") {
            step.justification = R1{};
        } else if (rule == "r2") {
            R2 r;
            r.premise = needIndex("premise");
            std::string rest;
            std::getline(js, rest);
            auto g = rest.find("gamma=");
            if (g == std::string::npos) throw ParseError("r2 needs gamma=<formula>", lineNo, 1);
            try {
                r.gamma = parse_formula(rest.substr(g + 6));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), lineNo, e.column());
            }
            step.justification = std::move(r);
        } else if (rule == "r3") {
            step.justification = R3{needIndex("premise")};
        } else if (rule == "r4") {
            step.justification = R4{needIndex("premise")};
        } else if (rule == "r5") {
            std::size_t a = needIndex("premise"), b = needIndex("premise");
            step.justification = R5{a, b};
        } else if (rule == "r6") {
            std::size_t a = needIndex("premise"), b = needIndex("premise");
            step.justification = R6{a, b};
        } else {
            throw ParseError("unknown rule '" + rule + "'", lineNo, 1);
        }
        out.steps.push_back(std::move(step));
    }
    return out;
}

std::string render_rule_proof(const RuleProof& p) {
    std::string out;
    for (std::size_t i = 0; i < p.steps.size(); ++i)
        out += std::to_string(i) + ": " + p.steps[i].conclusion.str() + " ; " +
               renderJust(p.steps[i].justification) + "\n";
    return out;
}

std::string render_proof_report(const ProofReport& r) {
    std::string out = r.ok ? "ok\n" : "FAIL\n";
    for (const auto& v : r.violations)
        out += "  step " + std::to_string(v.step) + ": " + v.message + "\n";
    return out;
}

}  // namespace quent
