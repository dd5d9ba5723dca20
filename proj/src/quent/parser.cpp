#include "quent/parser.hpp"

#include <cctype>

namespace quent {
namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void skipSpace() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                                     text[pos] == '\n'))
            advance();
    }

    bool atEnd() {
        skipSpace();
        return pos >= text.size();
    }

    char peek() {
        skipSpace();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool tryConsume(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    bool tryConsume(const std::string& s) {
        skipSpace();
        if (text.compare(pos, s.size(), s) == 0) {
            for (std::size_t i = 0; i < s.size(); ++i) advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!tryConsume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    std::string ident() {
        skipSpace();
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected identifier");
        std::string out;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            out += text[pos];
            advance();
        }
        return out;
    }

    // raw degree token: digits, '.', '/', or the word "inf"
    std::string degreeToken() {
        skipSpace();
        std::string out;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == '/' ))
            out += text[pos], advance();
        return out;
    }
};

Formula parseDisj(Lexer& lx);

Formula parseAtom(Lexer& lx) {
    char c = lx.peek();
    if (c == '0') {
        lx.advance();
        return Formula::bottom();
    }
    if (c == '1') {
        lx.advance();
        return Formula::top();
    }
    if (c == '(') {
        lx.advance();
        Formula f = parseDisj(lx);
        lx.expect(')', "to close group");
        return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return Formula::var(lx.ident());
    lx.fail("expected variable, constant, or '('");
}

Formula parseNeg(Lexer& lx) {
    if (lx.tryConsume('~')) return Formula::neg(parseNeg(lx));
    return parseAtom(lx);
}

Formula parseConj(Lexer& lx) {
    Formula f = parseNeg(lx);
    while (true) {
        lx.skipSpace();
        if (lx.pos < lx.text.size() && lx.text[lx.pos] == '&') {
            lx.advance();
            f = Formula::conj(f, parseNeg(lx));
        } else {
            return f;
        }
    }
}

Formula parseDisj(Lexer& lx) {
    Formula f = parseConj(lx);
    while (true) {
        lx.skipSpace();
        if (lx.pos < lx.text.size() && lx.text[lx.pos] == '|') {
            lx.advance();
            f = Formula::disj(f, parseConj(lx));
        } else {
            return f;
        }
    }
}

// Stops at "->" (which is not part of the formula grammar).
Formula parseFormulaPart(Lexer& lx) { return parseDisj(lx); }

Degree parseDegreeAt(Lexer& lx) {
    lx.skipSpace();
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '-') lx.fail("negative degree");
    std::string tok = lx.degreeToken();
    if (tok.empty()) lx.fail("expected degree");
    auto d = Degree::parse(tok);
    if (!d) lx.fail("malformed degree '" + tok + "'");
    return *d;
}

GoalSpec parseImplicationAt(Lexer& lx, bool allowQuery) {
    GoalSpec out;
    out.implication.antecedent = parseFormulaPart(lx);
    if (!lx.tryConsume("->")) lx.fail("expected '->'");
    lx.expect('[', "before degree");
    if (allowQuery && lx.tryConsume('?')) {
        out.queryMinimal = true;
        out.implication.degree = Degree::zero();
    } else {
        out.implication.degree = parseDegreeAt(lx);
    }
    lx.expect(']', "after degree");
    out.implication.consequent = parseFormulaPart(lx);
    return out;
}

}  // namespace

Formula parse_formula(const std::string& text) {
    Lexer lx(text);
    Formula f = parseFormulaPart(lx);
    if (!lx.atEnd()) lx.fail("unexpected trailing input");
    return f;
}

GradedImplication parse_implication(const std::string& text) {
    Lexer lx(text);
    GoalSpec g = parseImplicationAt(lx, false);
    if (!lx.atEnd()) lx.fail("unexpected trailing input");
    return g.implication;
}

GoalSpec parse_goal(const std::string& text) {
    Lexer lx(text);
    GoalSpec g = parseImplicationAt(lx, true);
    if (!lx.atEnd()) lx.fail("unexpected trailing input");
    return g;
}

Theory parse_theory(const std::string& text) {
    Theory t;
    std::size_t start = 0;
    int lineNo = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line =
            end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) {
            try {
                t.implications.push_back(parse_implication(line));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), lineNo, e.column());
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
        ++lineNo;
    }
    return t;
}

Degree parse_degree_text(const std::string& text) {
    auto d = Degree::parse(text);
    if (!d) throw ParseError("malformed degree '" + text + "'", 1, 1);
    return *d;
}

Clause parse_clause_text(const std::string& text) {
    Lexer lx(text);
    lx.expect('{', "to open clause");
    std::vector<Literal> lits;
    if (!lx.tryConsume('}')) {
        while (true) {
            bool positive = !lx.tryConsume('~');
            lits.emplace_back(Variable{lx.ident()}, positive);
            if (lx.tryConsume('}')) break;
            lx.expect(',', "between literals");
        }
    }
    if (!lx.atEnd()) lx.fail("unexpected trailing input after clause");
    return Clause(std::move(lits));
}

}  // namespace quent
