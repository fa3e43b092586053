#pragma once

#include <stdexcept>
#include <string>

namespace unisplit {

// Invalid user input (malformed instance, bad flag value, precondition violation).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters outside a solver's guaranteed regime (e.g. decide_d with d < n-2).
struct regime_error : std::domain_error {
    explicit regime_error(const std::string& what) : std::domain_error(what) {}
};

// Enumeration/state budget exceeded, or a wall-clock deadline expired.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unisplit
