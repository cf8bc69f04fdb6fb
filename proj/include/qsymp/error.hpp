#pragma once

#include <stdexcept>
#include <string>

namespace qsymp {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical precondition: division by zero, pole evaluation,
// invalid generator indices, non-dominant highest weight, ...
struct math_error : error {
    explicit math_error(const std::string& what) : error(what) {}
};

// Rewriting exceeded its step budget.  Always a bug or a pathological input,
// never silent.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

// Malformed expression or file input.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace qsymp
