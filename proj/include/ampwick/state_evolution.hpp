#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ampwick/expansion.hpp"
#include "ampwick/polynomial.hpp"

namespace ampwick {

struct SEState {
    std::vector<Rational> tau2;  // tau_0^2 .. tau_t^2
    std::optional<Rational> bound_M;
    bool assumption_holds = true;
    std::vector<std::string> warnings;
};

// tau_{s+1}^2 = se_step(f_s, tau_s^2) for s < t.  When M is given, violations
// of tau_s^2 <= M or |c_{s,d}| <= M are recorded as warnings.
SEState se_sequence(const std::vector<Polynomial>& F, int t, const Rational& tau0_2,
                    std::optional<Rational> M = std::nullopt);

// E[(tau Z)^m] = tau^m (m-1)!! for even m, 0 for odd m.
Rational predicted_moment(const Rational& tau2, int m);

// (2m-1)!! (2d_{t-1}-1)!!^m (2d_{t-2}-1)!!^{m d_{t-1}} ...; degrees = d_1..d_{t-1}.
Integer monomial_count(int m, const std::vector<int>& degrees);

// Sum over the expansion of (x_i^t)^power of Wick(T) * prod c_v * tau0^{#x0 leaves}.
Rational tree_moment_sum(const std::vector<Polynomial>& F, int t, int power, const Rational& tau0,
                         std::size_t budget = kDefaultBudget);

}  // namespace ampwick
