#ifndef RAAG_ERRORS_HPP
#define RAAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raag {

// Input file / syntax problems. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Violated precondition of an operation (unknown vertex, invalid pair, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounded search ran out of its node/candidate budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounded decision procedure exhausted its bound without proof either way.
class UndecidedError : public std::runtime_error {
public:
    explicit UndecidedError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace raag

#endif
