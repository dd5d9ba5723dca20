#ifndef QUENT_PARSER_HPP
#define QUENT_PARSER_HPP

#include <stdexcept>
#include <string>

#include "quent/formula.hpp"
#include "quent/theory.hpp"

namespace quent {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

// Grammar: formula := disj ; disj := conj ('|' conj)* ; conj := neg ('&' neg)* ;
// neg := '~' neg | atom ; atom := IDENT | '0' | '1' | '(' formula ')'.
Formula parse_formula(const std::string& text);

// FORMULA "->" "[" DEGREE "]" FORMULA, degree a decimal or p/q fraction.
GradedImplication parse_implication(const std::string& text);

// Like parse_implication but the degree may be '?', meaning "query the
// minimal degree"; the returned implication then carries degree 0.
struct GoalSpec {
    GradedImplication implication;
    bool queryMinimal = false;
};
GoalSpec parse_goal(const std::string& text);

// One implication per line; '#' starts a comment; blank lines ignored.
Theory parse_theory(const std::string& text);

Degree parse_degree_text(const std::string& text);

// Clause literal syntax: "{a,~b}", "{}".
Clause parse_clause_text(const std::string& text);

}  // namespace quent

#endif
