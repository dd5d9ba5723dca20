// quent command-line prover: proving, proof checking, normalization,
// countermodel search, and model evaluation over the text file formats.
//
// Exit codes: 0 positive answer, 1 negative answer, 2 parse/usage error,
// 3 search budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quent.h"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

int exitCodeFor(int status) {
    switch (status) {
        case QUENT_OK:
            return kExitPositive;
        case QUENT_ERR_BUDGET:
            return kExitBudget;
        default:
            return kExitError;
    }
}

int fail(int status) {
    std::cerr << "error: " << quent_last_error() << "\n";
    return exitCodeFor(status);
}

bool readFile(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return out.good();
}

struct Str {
    char* p = nullptr;
    ~Str() { quent_str_free(p); }
    std::string get() const { return p ? p : ""; }
};

struct TheoryHandle {
    quent_theory* p = nullptr;
    ~TheoryHandle() { quent_theory_free(p); }
};
struct BasicHandle {
    quent_basic_theory* p = nullptr;
    ~BasicHandle() { quent_basic_theory_free(p); }
};
struct ForestHandle {
    quent_forest* p = nullptr;
    ~ForestHandle() { quent_forest_free(p); }
};
struct ProofHandle {
    quent_proof* p = nullptr;
    ~ProofHandle() { quent_proof_free(p); }
};
struct ModelHandle {
    quent_model* p = nullptr;
    ~ModelHandle() { quent_model_free(p); }
};

int loadTheory(const std::string& path, TheoryHandle& t) {
    std::string text;
    if (!readFile(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitError;
    }
    int st = quent_theory_parse(text.c_str(), &t.p);
    if (st != QUENT_OK) return fail(st);
    return -1;  // no exit
}

int loadForest(const std::string& path, ForestHandle& f) {
    std::string text;
    if (!readFile(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitError;
    }
    int st = quent_forest_parse(text.c_str(), &f.p);
    if (st != QUENT_OK) return fail(st);
    return -1;
}

int emit(const std::string& outPath, const std::string& text) {
    if (outPath.empty()) {
        std::cout << text;
        return kExitPositive;
    }
    if (!writeFile(outPath, text)) {
        std::cerr << "error: cannot write " << outPath << "\n";
        return kExitError;
    }
    return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reasoner and proof toolkit for graded implications over quasimetric spaces"};
    app.require_subcommand(1);

    std::string theoryPath, goalText, outPath, spacePath, forestPath, proofPath, passes,
        implicationText, formulaText;
    bool jsonOut = false, anyClauseSet = false, smallestWeight = false;
    std::string toForestPath;
    std::size_t maxWorlds = 3, budget = 0;

    auto* prove = app.add_subcommand("prove", "minimal entailment degree with a forest witness");
    prove->add_option("-t,--theory", theoryPath, "theory file")->required();
    prove->add_option("goal", goalText, "goal implication; degree [?] queries the minimum")
        ->required();
    prove->add_option("-o,--out", outPath, "write the witness forest here");
    prove->add_option("--budget", budget, "clause-lattice state budget");
    prove->add_flag("--json", jsonOut, "machine-readable output");

    auto* checkForest = app.add_subcommand("check-forest", "verify a forest proof");
    checkForest->add_option("-t,--theory", theoryPath, "theory file")->required();
    checkForest->add_option("forest", forestPath, "forest file")->required();
    checkForest->add_option("--goal", goalText, "goal (defaults to the file's goal header)");
    checkForest->add_flag("--any-clause-set", anyClauseSet,
                          "honour bzeta:/beta: headers instead of the canonical clause sets");
    checkForest->add_flag("--json", jsonOut, "machine-readable output");

    auto* checkProof = app.add_subcommand("check-proof", "check a rule-level proof");
    checkProof->add_option("-t,--theory", theoryPath, "theory file")->required();
    checkProof->add_option("proof", proofPath, "rule proof file")->required();
    checkProof->add_flag("--smallest-weight", smallestWeight,
                         "check against the R3-free calculus with R5 taking maxima");
    checkProof->add_option("--to-forest", toForestPath,
                           "also translate to a forest proof and write it here")
        ->expected(1);
    checkProof->add_flag("--json", jsonOut, "machine-readable output");

    auto* counter = app.add_subcommand("countermodel", "search for a falsifying finite model");
    counter->add_option("-t,--theory", theoryPath, "theory file")->required();
    counter->add_option("goal", goalText, "implication to falsify")->required();
    counter->add_option("--max-worlds", maxWorlds, "largest world count to try");
    counter->add_option("--budget", budget, "candidate budget");
    counter->add_option("-o,--out", outPath, "write the space file here");
    counter->add_flag("--json", jsonOut, "machine-readable output");

    auto* evalCmd = app.add_subcommand("eval", "evaluate an implication in a model");
    evalCmd->add_option("-s,--space", spacePath, "space file")->required();
    evalCmd->add_option("implication", implicationText, "implication text")->required();
    evalCmd->add_flag("--json", jsonOut, "machine-readable output");

    auto* normalize = app.add_subcommand("normalize", "apply forest normalization passes");
    normalize->add_option("-t,--theory", theoryPath, "theory file")->required();
    normalize->add_option("forest", forestPath, "forest file")->required();
    normalize->add_option("--goal", goalText, "goal (defaults to the file's goal header)");
    normalize->add_option("--passes", passes,
                          "comma-separated pass tags (default: prune-improper,cap-inconsistent,"
                          "fresh-splits,standard-ends,drop-unused)");
    normalize->add_option("-o,--out", outPath, "write the normalized forest here");

    auto* validate = app.add_subcommand("validate-space", "check the quasimetric axioms");
    validate->add_option("space", spacePath, "space file")->required();
    validate->add_flag("--json", jsonOut, "machine-readable output");

    auto* basify = app.add_subcommand("basify", "print the basic normal form of a theory");
    basify->add_option("theory", theoryPath, "theory file")->required();
    basify->add_flag("--json", jsonOut, "machine-readable output");

    auto* taut = app.add_subcommand("taut", "decide whether a formula is a tautology");
    taut->add_option("formula", formulaText, "formula text")->required();

    CLI11_PARSE(app, argc, argv);

    if (prove->parsed()) {
        TheoryHandle t;
        if (int e = loadTheory(theoryPath, t); e >= 0) return e;
        int provable = 0;
        Str degree;
        ForestHandle witness;
        int st = quent_prove(t.p, goalText.c_str(), budget, &provable, &degree.p, &witness.p);
        if (st != QUENT_OK) return fail(st);
        std::string squeezed;
        for (char c : goalText)
            if (c != ' ' && c != '\t') squeezed += c;
        bool query = squeezed.find("[?]") != std::string::npos;
        std::string forestText;
        if (witness.p) {
            Str rendered;
            if (int rs = quent_forest_render(witness.p, &rendered.p); rs != QUENT_OK)
                return fail(rs);
            forestText = rendered.get();
        }
        if (jsonOut) {
            std::string j = "{\n  \"provable\": ";
            j += provable ? "true" : "false";
            if (degree.p) j += ",\n  \"minimal_degree\": \"" + degree.get() + "\"";
            j += "\n}\n";
            std::cout << j;
        } else if (!degree.p) {
            std::cout << "NOT PROVABLE\n";
        } else if (query) {
            std::cout << "minimal degree = " << degree.get() << "\n";
        } else if (provable) {
            std::cout << "PROVABLE (minimal degree = " << degree.get() << ")\n";
        } else {
            std::cout << "NOT PROVABLE at the requested degree (minimal degree = " << degree.get()
                      << ")\n";
        }
        if (provable && !forestText.empty()) {
            if (!outPath.empty()) {
                if (!writeFile(outPath, forestText)) {
                    std::cerr << "error: cannot write " << outPath << "\n";
                    return kExitError;
                }
            } else if (!jsonOut) {
                std::cout << forestText;
            }
        }
        return provable ? kExitPositive : kExitNegative;
    }

    if (checkForest->parsed()) {
        TheoryHandle t;
        if (int e = loadTheory(theoryPath, t); e >= 0) return e;
        ForestHandle f;
        if (int e = loadForest(forestPath, f); e >= 0) return e;
        BasicHandle bt;
        if (int st = quent_basify(t.p, &bt.p); st != QUENT_OK) return fail(st);
        int ok = 0;
        Str report;
        int st = quent_forest_verify(f.p, bt.p, goalText.empty() ? nullptr : goalText.c_str(),
                                     anyClauseSet ? 1 : 0, jsonOut ? 1 : 0, &ok, &report.p);
        if (st != QUENT_OK) return fail(st);
        std::cout << report.get();
        return ok ? kExitPositive : kExitNegative;
    }

    if (checkProof->parsed()) {
        TheoryHandle t;
        if (int e = loadTheory(theoryPath, t); e >= 0) return e;
        std::string text;
        if (!readFile(proofPath, text)) {
            std::cerr << "error: cannot read " << proofPath << "\n";
            return kExitError;
        }
        ProofHandle p;
        if (int st = quent_proof_parse(text.c_str(), &p.p); st != QUENT_OK) return fail(st);
        int ok = 0;
        Str report;
        int st = quent_proof_check(p.p, t.p, smallestWeight ? 1 : 0, jsonOut ? 1 : 0, &ok,
                                   &report.p);
        if (st != QUENT_OK) return fail(st);
        std::cout << report.get();
        if (ok && !toForestPath.empty()) {
            BasicHandle bt;
            if (int bs = quent_basify(t.p, &bt.p); bs != QUENT_OK) return fail(bs);
            ForestHandle f;
            if (int fs = quent_proof_to_forest(p.p, bt.p, &f.p); fs != QUENT_OK) return fail(fs);
            int forestOk = 0;
            Str forestReport;
            if (int vs = quent_forest_verify(f.p, bt.p, nullptr, 0, 0, &forestOk, &forestReport.p);
                vs != QUENT_OK)
                return fail(vs);
            if (!forestOk) {
                std::cerr << "error: translated forest does not verify\n" << forestReport.get();
                return kExitError;
            }
            std::cout << "translated forest verifies\n";
            Str rendered;
            if (int rs = quent_forest_render(f.p, &rendered.p); rs != QUENT_OK) return fail(rs);
            if (!writeFile(toForestPath, rendered.get())) {
                std::cerr << "error: cannot write " << toForestPath << "\n";
                return kExitError;
            }
        }
        return ok ? kExitPositive : kExitNegative;
    }

    if (counter->parsed()) {
        TheoryHandle t;
        if (int e = loadTheory(theoryPath, t); e >= 0) return e;
        ModelHandle m;
        int st = quent_countermodel(t.p, goalText.c_str(), maxWorlds, budget, &m.p);
        if (st != QUENT_OK) return fail(st);
        if (!m.p) {
            if (jsonOut)
                std::cout << "{\n  \"found\": false\n}\n";
            else
                std::cout << "no countermodel within " << maxWorlds << " worlds\n";
            return kExitNegative;
        }
        Str rendered;
        if (int rs = quent_model_render(m.p, &rendered.p); rs != QUENT_OK) return fail(rs);
        if (jsonOut) std::cout << "{\n  \"found\": true\n}\n";
        return emit(outPath, rendered.get());
    }

    if (evalCmd->parsed()) {
        std::string text;
        if (!readFile(spacePath, text)) {
            std::cerr << "error: cannot read " << spacePath << "\n";
            return kExitError;
        }
        ModelHandle m;
        if (int st = quent_model_parse(text.c_str(), &m.p); st != QUENT_OK) return fail(st);
        int satisfied = 0;
        Str h;
        int st = quent_model_eval(m.p, implicationText.c_str(), &satisfied, &h.p);
        if (st != QUENT_OK) return fail(st);
        if (jsonOut) {
            std::cout << "{\n  \"satisfied\": " << (satisfied ? "true" : "false")
                      << ",\n  \"hausdorff\": \"" << h.get() << "\"\n}\n";
        } else {
            std::cout << "hausdorff = " << h.get() << "\n" << (satisfied ? "SAT" : "UNSAT") << "\n";
        }
        return satisfied ? kExitPositive : kExitNegative;
    }

    if (normalize->parsed()) {
        TheoryHandle t;
        if (int e = loadTheory(theoryPath, t); e >= 0) return e;
        ForestHandle f;
        if (int e = loadForest(forestPath, f); e >= 0) return e;
        BasicHandle bt;
        if (int st = quent_basify(t.p, &bt.p); st != QUENT_OK) return fail(st);
        ForestHandle result;
        int st = quent_forest_normalize(f.p, bt.p, goalText.empty() ? nullptr : goalText.c_str(),
                                        passes.empty() ? nullptr : passes.c_str(), &result.p);
        if (st == QUENT_ERR_INVALID) {
            std::cerr << "error: " << quent_last_error() << "\n";
            return kExitNegative;  // input fails the pass preconditions
        }
        if (st != QUENT_OK) return fail(st);
        Str rendered;
        if (int rs = quent_forest_render(result.p, &rendered.p); rs != QUENT_OK) return fail(rs);
        return emit(outPath, rendered.get());
    }

    if (validate->parsed()) {
        std::string text;
        if (!readFile(spacePath, text)) {
            std::cerr << "error: cannot read " << spacePath << "\n";
            return kExitError;
        }
        ModelHandle m;
        if (int st = quent_model_parse(text.c_str(), &m.p); st != QUENT_OK) return fail(st);
        int ok = 0;
        Str report;
        int st = quent_model_validate(m.p, jsonOut ? 1 : 0, &ok, &report.p);
        if (st != QUENT_OK) return fail(st);
        std::cout << report.get();
        return ok ? kExitPositive : kExitNegative;
    }

    if (basify->parsed()) {
        TheoryHandle t;
        if (int e = loadTheory(theoryPath, t); e >= 0) return e;
        BasicHandle bt;
        if (int st = quent_basify(t.p, &bt.p); st != QUENT_OK) return fail(st);
        Str rendered;
        if (int st = quent_basic_theory_render(bt.p, jsonOut ? 1 : 0, &rendered.p); st != QUENT_OK)
            return fail(st);
        std::cout << rendered.get();
        return kExitPositive;
    }

    if (taut->parsed()) {
        int is = 0;
        int st = quent_tautology(formulaText.c_str(), &is);
        if (st != QUENT_OK) return fail(st);
        std::cout << (is ? "tautology" : "not a tautology") << "\n";
        return is ? kExitPositive : kExitNegative;
    }

    return kExitError;
}
