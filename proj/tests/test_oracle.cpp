#include "doctest.h"

#include "ampwick/errors.hpp"
#include "ampwick/oracle.hpp"

using namespace ampwick;

namespace {
const Polynomial z = Polynomial::identity();
}

TEST_CASE("exact Rademacher moments") {
    CHECK(exact_moment_rademacher({z}, 1, 2, 2).value == Rational(1, 2));
    CHECK(exact_moment_rademacher({z}, 1, 2, 3).value == Rational(2, 3));
    for (int N = 2; N <= 4; ++N) CHECK(exact_moment_rademacher({z}, 1, 1, N).value == 0);
    CHECK(exact_moment_rademacher({z}, 1, 2, 3).enumeration_size == 8);
    CHECK_THROWS_AS(exact_moment_rademacher({z}, 1, 2, 6), TooLarge);
}

TEST_CASE("tree-sum expectation") {
    CHECK(tree_sum_expectation({z}, 1, 2, 3).value == Rational(2, 3));
    CHECK(tree_sum_expectation({z}, 1, 3, 3).value == 0);
    CHECK_THROWS_AS(tree_sum_expectation({z}, 1, 2, 6), TooLarge);
}

TEST_CASE("tree sum equals the exact moment for linear iterations") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m <= 4; ++m) {
            CHECK(tree_sum_expectation({z}, 1, m, N).value == exact_moment_rademacher({z}, 1, m, N).value);
            CHECK(tree_sum_expectation({z, z}, 2, m, N).value == exact_moment_rademacher({z, z}, 2, m, N).value);
        }
}

TEST_CASE("quadratic surds") {
    QuadraticSurd r(3, 0, 1);
    CHECK((r * r).to_rational() == 3);
    QuadraticSurd s = r + QuadraticSurd(3, 2, 0);
    CHECK(s.rational_part() == 2);
    CHECK(s.surd_part() == 1);
    CHECK_THROWS(r.to_rational());
}

TEST_CASE("falling factorial identity") {
    CHECK(falling_factorial_partition_sum(5, 3) == 60);
    CHECK(falling_factorial_identity_check(7, 1));
    CHECK(falling_factorial_identity_check(10, 5));
    long parts = 0;
    enumerate_set_partitions(5, [&](const std::vector<int>&) { ++parts; });
    CHECK(parts == 52);
}
