#pragma once

#include <stdexcept>
#include <string>

namespace mal {

// Input files or CLI arguments that cannot be understood.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The requested instance admits no feasible solution (disconnected graph,
// age below the diameter, diameter bound below the graph diameter, ...).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An exact solver refused to run because the instance exceeds its budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mal
