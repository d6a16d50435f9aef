#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ampwick/amp.hpp"
#include "ampwick/expansion.hpp"

namespace ampwick {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

enum class Suite { Algebra, Identities, Oracle, MonteCarlo, All };

Suite parse_suite(const std::string& s);
const char* to_string(Suite s);
std::vector<int> suite_criteria(Suite s);

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 42;
    std::size_t budget = kDefaultBudget;
    // Replaces the Monte Carlo configuration of criteria 8 and 9.
    std::optional<AMPConfig> montecarlo;
};

// Configuration used by criteria 8 and 9: F = [z, (z^2-1)/sqrt2, (z^2-1)/sqrt2],
// N = 4000, 50 trials, Gaussian.
AMPConfig desk_scale_config(std::uint64_t seed, int jobs);

CriterionResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> run_suite(Suite s, const VerifyOptions& opt,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace ampwick
