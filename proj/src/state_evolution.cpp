#include "ampwick/state_evolution.hpp"

#include <stdexcept>

#include "ampwick/wick.hpp"

namespace ampwick {

SEState se_sequence(const std::vector<Polynomial>& F, int t, const Rational& tau0_2, std::optional<Rational> M) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    if (static_cast<int>(F.size()) < t) throw std::invalid_argument("F must provide f_0..f_{t-1}");
    if (sgn(tau0_2) < 0) throw std::invalid_argument("tau0^2 < 0");
    SEState s;
    s.bound_M = M;
    s.tau2.push_back(tau0_2);
    for (int k = 0; k < t; ++k) s.tau2.push_back(se_step(F[static_cast<std::size_t>(k)], s.tau2.back()));
    if (M) {
        for (std::size_t k = 0; k < s.tau2.size(); ++k)
            if (s.tau2[k] > *M) {
                s.assumption_holds = false;
                s.warnings.push_back("tau_" + std::to_string(k) + "^2 = " + to_string(s.tau2[k]) + " exceeds M");
            }
        Rational M2 = *M * *M;
        for (int k = 0; k < t; ++k) {
            const Polynomial& f = F[static_cast<std::size_t>(k)];
            for (int d = 0; d <= f.degree(); ++d)
                if (f.coefficient(d).square() > M2) {
                    s.assumption_holds = false;
                    s.warnings.push_back("|c_{" + std::to_string(k) + "," + std::to_string(d) + "}| exceeds M");
                }
        }
    }
    return s;
}

Rational predicted_moment(const Rational& tau2, int m) {
    if (m < 0) throw std::invalid_argument("negative moment");
    if (m % 2) return 0;
    return pow(tau2, static_cast<unsigned long>(m / 2)) * Rational(double_factorial(m - 1));
}

Integer monomial_count(int m, const std::vector<int>& degrees) {
    if (m < 0) throw std::invalid_argument("negative m");
    Integer r = double_factorial(2L * m - 1);
    Integer mult = m;
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        if (*it < 1) throw std::invalid_argument("degrees must be >= 1");
        Integer f = double_factorial(2L * *it - 1), p;
        mpz_pow_ui(p.get_mpz_t(), f.get_mpz_t(), mult.get_ui());
        r *= p;
        mult *= *it;
    }
    return r;
}

Rational tree_moment_sum(const std::vector<Polynomial>& F, int t, int power, const Rational& tau0, std::size_t budget) {
    auto trees = expand_iterate(F, t, power, budget);
    WickCache cache;
    Rational total = 0;
    for (const auto& wt : trees) {
        Integer w = wick_count(wt.tree, &cache);
        if (sgn(w) == 0 || wt.weight.is_zero()) continue;
        total += wt.weight.exact() * Rational(w) * pow(tau0, static_cast<unsigned long>(wt.tree.initial_count()));
    }
    return total;
}

}  // namespace ampwick
