#include "quent/forest.hpp"

#include <algorithm>
#include <sstream>

#include "quent/parser.hpp"

namespace quent {

ProofForest::ProofForest(std::vector<ForestNode> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const ForestNode& a, const ForestNode& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!index_.emplace(nodes_[i].id, i).second)
            throw std::invalid_argument("ProofForest: duplicate node id " +
                                        std::to_string(nodes_[i].id));
        children_[nodes_[i].id];
    }
    for (const auto& n : nodes_) {
        if (n.parent) {
            if (!index_.count(*n.parent) || *n.parent == n.id)
                throw std::invalid_argument("ProofForest: node " + std::to_string(n.id) +
                                            " has unknown parent");
            children_[*n.parent].push_back(n.id);
        } else {
            roots_.push_back(n.id);
        }
    }
    // acyclicity: walking parent links from any node must reach a root
    for (const auto& n : nodes_) {
        std::size_t steps = 0;
        const ForestNode* cur = &n;
        while (cur->parent) {
            cur = &node(*cur->parent);
            if (++steps > nodes_.size())
                throw std::invalid_argument("ProofForest: parent links contain a cycle");
        }
    }
}

int ProofForest::maxId() const { return nodes_.empty() ? -1 : nodes_.back().id; }

Degree forest_length(const ProofForest& f) {
    Degree best = Degree::zero();
    // depth-first over each tree, accumulating weight and a star flag
    struct Frame {
        int id;
        Degree sum;
        bool star;
    };
    std::vector<Frame> stack;
    for (int r : f.roots()) stack.push_back({r, Degree::zero(), f.node(r).improper});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const auto& kids = f.children(fr.id);
        if (kids.empty()) {
            if (!fr.star) best = max(best, fr.sum);
            continue;
        }
        for (int c : kids) {
            const ForestNode& child = f.node(c);
            stack.push_back({c, fr.sum + child.inWeight, fr.star || child.improper});
        }
    }
    return best;
}

JustificationCounts count_justifications(const ProofForest& f) {
    JustificationCounts out;
    for (const auto& n : f.nodes()) {
        if (!n.justification) continue;
        std::visit(
            [&](const auto& j) {
                using T = std::decay_t<decltype(j)>;
                if constexpr (std::is_same_v<T, CaseA>)
                    ++out.caseA;
                else if constexpr (std::is_same_v<T, CaseB>)
                    ++out.caseB;
                else if constexpr (std::is_same_v<T, CaseC>)
                    ++out.caseC;
                else
                    ++out.caseD;
            },
            *n.justification);
    }
    return out;
}

namespace {

std::string renderJustification(const ForestNode& n) {
    if (!n.justification) return "leaf";
    return std::visit(
        [](const auto& j) -> std::string {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, CaseA>)
                return "A:" + std::to_string(j.implIndex);
            else if constexpr (std::is_same_v<T, CaseB>)
                return "B:" + std::to_string(j.implIndex);
            else if constexpr (std::is_same_v<T, CaseC>)
                return "C";
            else
                return "D:" + j.splitVar.name;
        },
        *n.justification);
}

std::vector<std::string> splitFields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

ClauseSet parseClauseList(const std::string& rest, int lineNo) {
    std::vector<Clause> clauses;
    std::istringstream in(rest);
    std::string tok;
    while (in >> tok) {
        try {
            clauses.push_back(parse_clause_text(tok));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), lineNo, e.column());
        }
    }
    return ClauseSet(std::move(clauses));
}

}  // namespace

ForestFile parse_forest(const std::string& text) {
    ForestFile out;
    std::vector<ForestNode> nodes;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty()) continue;
        if (trimmed.rfind("goal:", 0) == 0) {
            try {
                out.goal = parse_implication(trimmed.substr(5));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), lineNo, e.column());
            }
            continue;
        }
        if (trimmed.rfind("bzeta:", 0) == 0) {
            out.suppliedAntecedentSet = parseClauseList(trimmed.substr(6), lineNo);
            continue;
        }
        if (trimmed.rfind("beta:", 0) == 0) {
            out.suppliedConsequentSet = parseClauseList(trimmed.substr(5), lineNo);
            continue;
        }
        auto fields = splitFields(trimmed);
        if (fields.size() < 4 || fields[0] != "node")
            throw ParseError("expected 'node <id> <label> root|parent=<id> w=<degree> just=...'",
                             lineNo, 1);
        ForestNode n;
        try {
            n.id = std::stoi(fields[1]);
        } catch (...) {
            throw ParseError("malformed node id '" + fields[1] + "'", lineNo, 1);
        }
        if (fields[2] == "*") {
            n.improper = true;
        } else {
            try {
                n.clause = parse_clause_text(fields[2]);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), lineNo, e.column());
            }
        }
        std::size_t at = 3;
        if (fields[at] == "root") {
            ++at;
        } else if (fields[at].rfind("parent=", 0) == 0) {
            try {
                n.parent = std::stoi(fields[at].substr(7));
            } catch (...) {
                throw ParseError("malformed parent id", lineNo, 1);
            }
            ++at;
        } else {
            throw ParseError("expected 'root' or 'parent=<id>'", lineNo, 1);
        }
        if (at < fields.size() && fields[at].rfind("w=", 0) == 0) {
            auto d = Degree::parse(fields[at].substr(2));
            if (!d) throw ParseError("malformed weight '" + fields[at] + "'", lineNo, 1);
            n.inWeight = *d;
            ++at;
        } else if (n.parent) {
            throw ParseError("non-root node needs w=<degree>", lineNo, 1);
        }
        if (!n.parent && !n.inWeight.isZero())
            throw ParseError("root weight must be 0", lineNo, 1);
        if (at >= fields.size() || fields[at].rfind("just=", 0) != 0)
            throw ParseError("expected just=A:<k>|B:<k>|C|D:<var>|leaf", lineNo, 1);
        std::string just = fields[at].substr(5);
        if (just == "leaf") {
            // no justification
        } else if (just == "C") {
            n.justification = CaseC{};
        } else if (just.rfind("A:", 0) == 0 || just.rfind("B:", 0) == 0) {
            std::size_t k = 0;
            try {
                k = static_cast<std::size_t>(std::stoul(just.substr(2)));
            } catch (...) {
                throw ParseError("malformed implication index in '" + just + "'", lineNo, 1);
            }
            if (just[0] == 'A')
                n.justification = CaseA{k};
            else
                n.justification = CaseB{k};
        } else if (just.rfind("D:", 0) == 0) {
            n.justification = CaseD{Variable{just.substr(2)}};
        } else {
            throw ParseError("malformed justification '" + just + "'", lineNo, 1);
        }
        if (n.improper && n.justification)
            throw ParseError("* nodes carry no justification", lineNo, 1);
        if (++at < fields.size()) throw ParseError("unexpected trailing field", lineNo, 1);
        nodes.push_back(std::move(n));
    }
    try {
        out.forest = ProofForest(std::move(nodes));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineNo ? lineNo : 1, 1);
    }
    return out;
}

std::string render_forest(const ProofForest& f, const GradedImplication* goal) {
    std::string out;
    if (goal) out += "goal: " + goal->str() + "\n";
    for (const auto& n : f.nodes()) {
        out += "node " + std::to_string(n.id) + " " + (n.improper ? "*" : n.clause.str());
        out += n.parent ? " parent=" + std::to_string(*n.parent) : " root";
        out += " w=" + n.inWeight.str();
        out += " just=" + renderJustification(n) + "\n";
    }
    return out;
}

}  // namespace quent
