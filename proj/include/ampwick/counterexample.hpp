#pragma once

#include <string>

#include "ampwick/polynomial.hpp"

namespace ampwick {

enum class Regime { SEValid, SEFailure, Indeterminate };

const char* to_string(Regime r);

// All functions take log N rather than N so that N = e^100 stays finite.
struct RegimeReport {
    double log_n = 0.0;
    int D = 0;
    int m = 0;
    int t = 0;
    double M = 1.0;
    double K1 = 21.0;
    double C_D = 0.0;
    double exponent_lower_bound = 0.0;
    double threshold_t = 0.0;
    double valid_limit = 0.0;   // log N / C_D
    double window_limit = 0.0;  // log N / log D
    Regime verdict = Regime::Indeterminate;
    std::string B = "unknown";
};

// m D^{t-1} (t-9) log(mD) - log N * m D^{t-2}
double exponent_lower_bound(double log_n, int D, int t, int m);

// log N / (D log D)
double failure_threshold(double log_n, int D);

RegimeReport regime_classify(double log_n, int D, int t, double M = 1.0, double K1 = 21.0, int m = 2);

// Smallest integer t in [1, t_limit] with a positive exponent, or -1.
int exponent_crossing(double log_n, int D, int m, int t_limit = 1000);

// z^D / sqrt((2D-1)!!), so that se_step at tau^2 = 1 returns 1.
Polynomial normalized_monomial(int D);

}  // namespace ampwick
