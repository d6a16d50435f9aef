#include "doctest.h"

#include <cmath>

#include "ampwick/counterexample.hpp"

using namespace ampwick;

TEST_CASE("exponent lower bound") {
    CHECK(exponent_lower_bound(20, 4, 2, 2) < 0);
    CHECK(exponent_lower_bound(20, 4, 12, 2) > 0);
    for (int t = 12; t < 40; ++t) CHECK(exponent_lower_bound(20, 4, t + 1, 2) > exponent_lower_bound(20, 4, t, 2));
    CHECK(std::isfinite(exponent_lower_bound(100, 8, 300, 2)));
}

TEST_CASE("failure threshold") {
    CHECK(failure_threshold(20, 4) == doctest::Approx(3.607).epsilon(1e-3));
    CHECK(failure_threshold(20, 2) == doctest::Approx(14.427).epsilon(1e-3));
    CHECK(failure_threshold(3 * std::log(3.0), 3) == doctest::Approx(1.0));
    for (int D = 2; D <= 10; ++D) CHECK(failure_threshold(50, D) < 50 / std::log(static_cast<double>(D)));
}

TEST_CASE("regime classification") {
    CHECK(regime_classify(100, 3, 1, 1, 21).verdict == Regime::SEValid);
    CHECK(regime_classify(20, 4, 5).verdict == Regime::SEFailure);
    CHECK(regime_classify(20, 4, 20).verdict == Regime::Indeterminate);
    auto r = regime_classify(20, 4, 5);
    CHECK(r.B == "unknown");
    CHECK(r.C_D == doctest::Approx(21 * 4 * std::log(4.0)));
    CHECK(std::string(to_string(r.verdict)) == "SE_Failure_Regime");
}

TEST_CASE("normalized monomial has unit variance") {
    for (int D = 1; D <= 8; ++D) CHECK(se_step(normalized_monomial(D), 1) == 1);
}
