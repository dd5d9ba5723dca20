#include "quent.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "quent/countermodel.hpp"
#include "quent/errors.hpp"
#include "quent/normalize.hpp"
#include "quent/oracle.hpp"
#include "quent/parser.hpp"
#include "quent/prove.hpp"
#include "quent/rule_proof.hpp"
#include "quent/space.hpp"
#include "quent/translate.hpp"
#include "quent/verify.hpp"

using json = nlohmann::ordered_json;

struct quent_theory {
    quent::Theory v;
};
struct quent_basic_theory {
    quent::BasicTheory v;
    std::vector<std::size_t> source;
};
struct quent_forest {
    quent::ProofForest v;
    std::optional<quent::GradedImplication> goal;
    std::optional<quent::ClauseSet> bzeta;
    std::optional<quent::ClauseSet> beta;
};
struct quent_proof {
    quent::RuleProof v;
};
struct quent_model {
    quent::Model v;
};

namespace {

thread_local std::string g_error;

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guard(F&& fn) {
    try {
        return fn();
    } catch (const quent::ParseError& e) {
        g_error = e.what();
        return QUENT_ERR_PARSE;
    } catch (const quent::BudgetError& e) {
        g_error = e.what();
        return QUENT_ERR_BUDGET;
    } catch (const quent::PreconditionError& e) {
        g_error = e.what();
        return QUENT_ERR_INVALID;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return QUENT_ERR_INVALID;
    } catch (const std::exception& e) {
        g_error = e.what();
        return QUENT_ERR_INTERNAL;
    }
}

int badArgument(const char* what) {
    g_error = std::string("invalid argument: ") + what;
    return QUENT_ERR_INVALID;
}

// goal from an explicit string or a forest's goal header
quent::GradedImplication resolveGoal(const quent_forest* f, const char* goal) {
    if (goal && *goal) return quent::parse_implication(goal);
    if (f && f->goal) return *f->goal;
    throw quent::PreconditionError("no goal given and the forest file has no goal header");
}

json violationsJson(const quent::VerificationReport& r) {
    json out;
    out["ok"] = r.ok;
    out["length"] = r.length.str();
    out["violations"] = json::array();
    for (const auto& v : r.violations)
        out["violations"].push_back({{"node", v.node}, {"tag", v.tag}, {"message", v.message}});
    return out;
}

}  // namespace

extern "C" {

const char* quent_version(void) { return "0.1.0"; }

const char* quent_last_error(void) { return g_error.c_str(); }

void quent_str_free(char* s) { std::free(s); }

int quent_theory_parse(const char* text, quent_theory** out) {
    if (!text || !out) return badArgument("quent_theory_parse");
    return guard([&] {
        *out = new quent_theory{quent::parse_theory(text)};
        return QUENT_OK;
    });
}

void quent_theory_free(quent_theory* t) { delete t; }

int quent_theory_size(const quent_theory* t, size_t* out) {
    if (!t || !out) return badArgument("quent_theory_size");
    *out = t->v.size();
    return QUENT_OK;
}

int quent_basify(const quent_theory* t, quent_basic_theory** out) {
    if (!t || !out) return badArgument("quent_basify");
    return guard([&] {
        auto conv = quent::to_basic_theory(t->v);
        *out = new quent_basic_theory{std::move(conv.theory), std::move(conv.source)};
        return QUENT_OK;
    });
}

void quent_basic_theory_free(quent_basic_theory* bt) { delete bt; }

int quent_basic_theory_render(const quent_basic_theory* bt, int as_json, char** out) {
    if (!bt || !out) return badArgument("quent_basic_theory_render");
    return guard([&] {
        if (as_json) {
            json j = json::array();
            for (std::size_t i = 0; i < bt->v.size(); ++i) {
                const auto& b = bt->v.implications[i];
                j.push_back({{"antecedent", quent::clause_formula(b.antecedent()).str()},
                             {"consequent", quent::clause_set_formula(b.consequent()).str()},
                             {"degree", b.degree().str()},
                             {"source", bt->source[i]}});
            }
            *out = dup(j.dump(2) + "\n");
        } else {
            std::string text;
            for (std::size_t i = 0; i < bt->v.size(); ++i) {
                text += bt->v.implications[i].flatten().str();
                text += "  # from " + std::to_string(bt->source[i]) + "\n";
            }
            *out = dup(text);
        }
        return QUENT_OK;
    });
}

int quent_tautology(const char* formula, int* out) {
    if (!formula || !out) return badArgument("quent_tautology");
    return guard([&] {
        *out = quent::is_tautology(quent::parse_formula(formula)) ? 1 : 0;
        return QUENT_OK;
    });
}

int quent_prove(const quent_theory* t, const char* goal, size_t state_budget, int* provable,
                char** minimal_degree, quent_forest** witness) {
    if (!t || !goal || !provable || !minimal_degree) return badArgument("quent_prove");
    return guard([&] {
        quent::GoalSpec spec = quent::parse_goal(goal);
        quent::BasicConversion conv = quent::to_basic_theory(t->v);
        quent::ProveOptions opts;
        if (state_budget) opts.stateBudget = state_budget;
        quent::DegreeResult r = quent::entailment_degree(
            conv.theory, spec.implication.antecedent, spec.implication.consequent, opts);
        *minimal_degree = nullptr;
        if (witness) *witness = nullptr;
        if (!r.provable) {
            *provable = 0;
            return QUENT_OK;
        }
        bool atAsked = spec.queryMinimal || *r.degree <= spec.implication.degree;
        *provable = atAsked ? 1 : 0;
        *minimal_degree = dup(r.degree->str());
        if (witness) {
            quent::GradedImplication proved = spec.implication;
            // the witness verifies at the asked degree when reachable,
            // otherwise at the minimal one
            proved.degree = atAsked && !spec.queryMinimal ? spec.implication.degree : *r.degree;
            *witness = new quent_forest{std::move(*r.forest), proved, std::nullopt, std::nullopt};
        }
        return QUENT_OK;
    });
}

int quent_forest_parse(const char* text, quent_forest** out) {
    if (!text || !out) return badArgument("quent_forest_parse");
    return guard([&] {
        quent::ForestFile file = quent::parse_forest(text);
        *out = new quent_forest{std::move(file.forest), std::move(file.goal),
                                std::move(file.suppliedAntecedentSet),
                                std::move(file.suppliedConsequentSet)};
        return QUENT_OK;
    });
}

void quent_forest_free(quent_forest* f) { delete f; }

int quent_forest_render(const quent_forest* f, char** out) {
    if (!f || !out) return badArgument("quent_forest_render");
    return guard([&] {
        *out = dup(quent::render_forest(f->v, f->goal ? &*f->goal : nullptr));
        return QUENT_OK;
    });
}

int quent_forest_goal(const quent_forest* f, char** out) {
    if (!f || !out) return badArgument("quent_forest_goal");
    *out = f->goal ? dup(f->goal->str()) : nullptr;
    return QUENT_OK;
}

int quent_forest_length(const quent_forest* f, char** out) {
    if (!f || !out) return badArgument("quent_forest_length");
    return guard([&] {
        *out = dup(quent::forest_length(f->v).str());
        return QUENT_OK;
    });
}

int quent_forest_verify(const quent_forest* f, const quent_basic_theory* bt, const char* goal,
                        int any_clause_set, int as_json, int* ok, char** report) {
    if (!f || !bt || !ok || !report) return badArgument("quent_forest_verify");
    return guard([&] {
        quent::GradedImplication g = resolveGoal(f, goal);
        quent::VerifyOptions opts;
        if (any_clause_set) {
            opts.antecedentSet = f->bzeta;
            opts.consequentSet = f->beta;
        }
        quent::VerificationReport r = quent::verify_forest(f->v, bt->v, g, opts);
        *ok = r.ok ? 1 : 0;
        *report = dup(as_json ? violationsJson(r).dump(2) + "\n" : quent::render_report(r));
        return QUENT_OK;
    });
}

int quent_forest_normalize(const quent_forest* f, const quent_basic_theory* bt, const char* goal,
                           const char* passes, quent_forest** out) {
    if (!f || !bt || !out) return badArgument("quent_forest_normalize");
    return guard([&] {
        quent::GradedImplication g = resolveGoal(f, goal);
        std::vector<quent::NormalizePass> plan;
        if (!passes || !*passes) {
            plan = quent::default_normalize_passes();
        } else {
            std::string text(passes);
            std::size_t start = 0;
            while (start <= text.size()) {
                auto comma = text.find(',', start);
                std::string tag = comma == std::string::npos ? text.substr(start)
                                                             : text.substr(start, comma - start);
                if (!tag.empty()) {
                    auto p = quent::NormalizePass::parse(tag);
                    if (!p) throw std::invalid_argument("unknown normalize pass '" + tag + "'");
                    plan.push_back(*p);
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        quent::ProofForest result = quent::normalize_forest(f->v, bt->v, g, plan);
        *out = new quent_forest{std::move(result), g, std::nullopt, std::nullopt};
        return QUENT_OK;
    });
}

int quent_forest_to_proof(const quent_forest* f, const quent_basic_theory* bt, const char* goal,
                          quent_proof** out) {
    if (!f || !bt || !out) return badArgument("quent_forest_to_proof");
    return guard([&] {
        quent::GradedImplication g = resolveGoal(f, goal);
        *out = new quent_proof{quent::forest_to_rule_proof(f->v, bt->v, g)};
        return QUENT_OK;
    });
}

int quent_proof_parse(const char* text, quent_proof** out) {
    if (!text || !out) return badArgument("quent_proof_parse");
    return guard([&] {
        *out = new quent_proof{quent::parse_rule_proof(text)};
        return QUENT_OK;
    });
}

void quent_proof_free(quent_proof* p) { delete p; }

int quent_proof_render(const quent_proof* p, char** out) {
    if (!p || !out) return badArgument("quent_proof_render");
    *out = dup(quent::render_rule_proof(p->v));
    return QUENT_OK;
}

int quent_proof_check(const quent_proof* p, const quent_theory* t, int variant, int as_json,
                      int* ok, char** report) {
    if (!p || !t || !ok || !report) return badArgument("quent_proof_check");
    return guard([&] {
        quent::ProofReport r = quent::check_rule_proof(
            p->v, t->v,
            variant ? quent::CalculusVariant::SmallestWeight : quent::CalculusVariant::Standard);
        *ok = r.ok ? 1 : 0;
        if (as_json) {
            json j;
            j["ok"] = r.ok;
            j["violations"] = json::array();
            for (const auto& v : r.violations)
                j["violations"].push_back({{"step", v.step}, {"message", v.message}});
            *report = dup(j.dump(2) + "\n");
        } else {
            *report = dup(quent::render_proof_report(r));
        }
        return QUENT_OK;
    });
}

int quent_proof_to_forest(const quent_proof* p, const quent_basic_theory* bt, quent_forest** out) {
    if (!p || !bt || !out) return badArgument("quent_proof_to_forest");
    return guard([&] {
        quent::ProofForest f = quent::rule_proof_to_forest(p->v, bt->v);
        std::optional<quent::GradedImplication> goal;
        if (!p->v.empty()) goal = p->v.conclusion();
        *out = new quent_forest{std::move(f), std::move(goal), std::nullopt, std::nullopt};
        return QUENT_OK;
    });
}

int quent_model_parse(const char* text, quent_model** out) {
    if (!text || !out) return badArgument("quent_model_parse");
    return guard([&] {
        *out = new quent_model{quent::parse_model(text)};
        return QUENT_OK;
    });
}

void quent_model_free(quent_model* m) { delete m; }

int quent_model_render(const quent_model* m, char** out) {
    if (!m || !out) return badArgument("quent_model_render");
    *out = dup(quent::render_model(m->v));
    return QUENT_OK;
}

int quent_model_validate(const quent_model* m, int as_json, int* ok, char** report) {
    if (!m || !ok || !report) return badArgument("quent_model_validate");
    return guard([&] {
        quent::SpaceValidation r = quent::validate_space(m->v.space);
        *ok = r.ok ? 1 : 0;
        if (as_json) {
            json j;
            j["ok"] = r.ok;
            j["violations"] = json::array();
            for (const auto& v : r.violations)
                j["violations"].push_back({{"axiom", v.axiom}, {"detail", v.detail}});
            *report = dup(j.dump(2) + "\n");
        } else {
            std::string text = r.ok ? "ok\n" : "FAIL\n";
            for (const auto& v : r.violations) text += "  [" + v.axiom + "] " + v.detail + "\n";
            *report = dup(text);
        }
        return QUENT_OK;
    });
}

int quent_model_eval(const quent_model* m, const char* implication, int* satisfied,
                     char** hausdorff) {
    if (!m || !implication || !satisfied || !hausdorff) return badArgument("quent_model_eval");
    return guard([&] {
        quent::GradedImplication imp = quent::parse_implication(implication);
        quent::WorldSet a = quent::evaluate(m->v, imp.antecedent);
        quent::WorldSet b = quent::evaluate(m->v, imp.consequent);
        quent::ExtendedDegree h = quent::hausdorff(m->v.space, a, b);
        *satisfied = h <= quent::ExtendedDegree(imp.degree) ? 1 : 0;
        *hausdorff = dup(h.str());
        return QUENT_OK;
    });
}

int quent_countermodel(const quent_theory* t, const char* goal, size_t max_worlds, size_t budget,
                       quent_model** out) {
    if (!t || !goal || !out) return badArgument("quent_countermodel");
    return guard([&] {
        quent::GradedImplication g = quent::parse_implication(goal);
        quent::CountermodelOptions opts;
        opts.maxWorlds = max_worlds ? max_worlds : 3;
        if (budget) opts.budget = budget;
        auto m = quent::find_countermodel(t->v, g, opts);
        *out = m ? new quent_model{std::move(*m)} : nullptr;
        return QUENT_OK;
    });
}

}  // extern "C"
