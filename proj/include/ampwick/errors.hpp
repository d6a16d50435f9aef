#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ampwick {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("tree budget exceeded (" + std::to_string(budget) + ")"), budget(budget) {}
    std::size_t budget;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RecursionDepthExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFinite : std::runtime_error {
    NonFinite(int step, long trial = -1)
        : std::runtime_error(trial < 0 ? "non-finite iterate at step " + std::to_string(step)
                                       : "non-finite iterate at step " + std::to_string(step) +
                                             " in trial " + std::to_string(trial)),
          step(step), trial(trial) {}
    int step;
    long trial;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ampwick
