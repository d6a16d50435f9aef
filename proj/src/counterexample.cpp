#include "ampwick/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ampwick {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::SEValid: return "SE_Valid_Regime";
        case Regime::SEFailure: return "SE_Failure_Regime";
        default: return "Indeterminate";
    }
}

double exponent_lower_bound(double log_n, int D, int t, int m) {
    if (D < 2 || t < 1 || m < 1) throw std::invalid_argument("need D >= 2, t >= 1, m >= 1");
    // m D^{t-2} [ D (t-9) log(mD) - log N ], sized in log space.
    double bracket = D * (t - 9) * std::log(static_cast<double>(m) * D) - log_n;
    if (bracket == 0.0) return 0.0;
    double log_mag = std::log(static_cast<double>(m)) + (t - 2) * std::log(static_cast<double>(D)) + std::log(std::abs(bracket));
    return std::copysign(std::exp(log_mag), bracket);
}

double failure_threshold(double log_n, int D) {
    if (D < 2) throw std::invalid_argument("need D >= 2");
    return log_n / (D * std::log(static_cast<double>(D)));
}

RegimeReport regime_classify(double log_n, int D, int t, double M, double K1, int m) {
    if (K1 <= 20) throw std::invalid_argument("K1 must exceed 20");
    RegimeReport r;
    r.log_n = log_n;
    r.D = D;
    r.m = m;
    r.t = t;
    r.M = M;
    r.K1 = K1;
    r.C_D = K1 * D * std::log(std::max(static_cast<double>(D), M));
    r.exponent_lower_bound = exponent_lower_bound(log_n, D, t, m);
    r.threshold_t = failure_threshold(log_n, D);
    r.valid_limit = log_n / r.C_D;
    r.window_limit = log_n / std::log(static_cast<double>(D));
    if (t <= r.valid_limit) r.verdict = Regime::SEValid;
    else if (t >= r.threshold_t && t <= r.window_limit) r.verdict = Regime::SEFailure;
    else r.verdict = Regime::Indeterminate;
    return r;
}

int exponent_crossing(double log_n, int D, int m, int t_limit) {
    for (int t = 1; t <= t_limit; ++t)
        if (exponent_lower_bound(log_n, D, t, m) > 0) return t;
    return -1;
}

Polynomial normalized_monomial(int D) {
    if (D < 1) throw std::invalid_argument("need D >= 1");
    return Polynomial::monomial(D).normalized_variance();
}

}  // namespace ampwick
