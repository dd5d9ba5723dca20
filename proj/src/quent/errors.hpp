#ifndef QUENT_ERRORS_HPP
#define QUENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quent {

// Raised when a configured search budget is exhausted.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quent

#endif
