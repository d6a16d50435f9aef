#include "doctest.h"

#include "ampwick/partitions.hpp"
#include "ampwick/state_evolution.hpp"

using namespace ampwick;

namespace {
const Polynomial z = Polynomial::identity();
}

TEST_CASE("se_sequence") {
    CHECK(se_sequence({z, z, z}, 3, 1).tau2 == std::vector<Rational>{1, 1, 1, 1});
    CHECK(se_sequence({z, Polynomial::monomial(3)}, 2, 1).tau2 == std::vector<Rational>{1, 1, 15});
    // tau_3^2 = E[(tau_2 Z)^6] = 15^3 * 15.
    CHECK(se_sequence({z, Polynomial::monomial(3), Polynomial::monomial(3)}, 3, 1).tau2.back() == 50625);
    auto s = se_sequence({z, Polynomial::monomial(3)}, 2, 1, Rational(10));
    CHECK_FALSE(s.assumption_holds);
    CHECK_FALSE(s.warnings.empty());
}

TEST_CASE("predicted_moment") {
    CHECK(predicted_moment(1, 4) == 3);
    CHECK(predicted_moment(15, 2) == 15);
    CHECK(predicted_moment(7, 3) == 0);
}

TEST_CASE("monomial_count") {
    CHECK(monomial_count(1, {3}) == 15);
    CHECK(monomial_count(2, {}) == 3);
    CHECK(monomial_count(1, {2}) == 3);
}

TEST_CASE("monomial_count agrees with class enumeration") {
    for (int two_m : {2, 4})
        for (int d = 1; d <= 3; ++d) {
            auto trees = expand_iterate({z, Polynomial::monomial(d)}, 2, two_m);
            REQUIRE(trees.size() == 1);
            CHECK(count_delta_zero_classes(trees[0].tree) == monomial_count(two_m / 2, {d}));
        }
}

TEST_CASE("tree_moment_sum") {
    CHECK(tree_moment_sum({z, Polynomial::monomial(3)}, 2, 2, 1) == 15);
    CHECK(tree_moment_sum({z, Polynomial({0, 1, 1})}, 2, 2, 1) == 4);
    CHECK(tree_moment_sum({z}, 1, 4, 1) == 3);
    CHECK(tree_moment_sum({z, Polynomial({0, 1, 1})}, 2, 3, 1) == 0);
    Polynomial h({-1, 0, 1}, Rational(1, 2));
    CHECK(tree_moment_sum({z, h, h}, 3, 4, 1) == 3);
    CHECK(tree_moment_sum({z, Polynomial({1, 0, 1})}, 2, 2, Rational(1, 2)) ==
          predicted_moment(se_sequence({z, Polynomial({1, 0, 1})}, 2, Rational(1, 4)).tau2.back(), 2));
}
