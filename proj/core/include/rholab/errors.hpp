#pragma once

#include <stdexcept>
#include <string>

namespace rholab {

// A walk or iteration ran past its step/iteration budget. Budgets are sized
// so that exhaustion indicates a bug or a misconfigured experiment, not bad
// luck.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A collision produced a_k == a_l mod n, so the linear congruence for the
// discrete log is degenerate. Callers restart from a fresh random start.
class DegenerateCollision : public std::runtime_error {
public:
    explicit DegenerateCollision(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration (bad flag values, malformed config file).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace rholab
