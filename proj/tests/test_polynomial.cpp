#include "doctest.h"

#include "ampwick/polynomial.hpp"
#include "ampwick/rational.hpp"

using namespace ampwick;

TEST_CASE("eval") {
    CHECK(eval(Polynomial::identity(), 2.0) == 2.0);
    CHECK(eval(Polynomial::monomial(3), 2.0) == 8.0);
    CHECK(eval(Polynomial({0, 1, 1}), 3.0) == 12.0);
}

TEST_CASE("derivative") {
    CHECK(derivative(Polynomial::monomial(3)) == Polynomial({0, 0, 3}));
    CHECK(derivative(Polynomial({5})).is_zero());
    CHECK(derivative(Polynomial({0, 1, 1})) == Polynomial({1, 2}));
    Polynomial h({-1, 0, 1}, Rational(1, 2));
    CHECK(derivative(h) == Polynomial({0, 2}, Rational(1, 2)));
}

TEST_CASE("gaussian moments") {
    CHECK(gaussian_moment(0) == 1);
    CHECK(gaussian_moment(6) == 15);
    CHECK(gaussian_moment(3) == 0);
}

TEST_CASE("gaussian inner product and se_step") {
    CHECK(gaussian_inner(Polynomial::identity(), Polynomial::identity(), 1) == 1);
    CHECK(gaussian_inner(Polynomial::monomial(3), Polynomial::monomial(3), 1) == 15);
    CHECK(gaussian_inner(Polynomial({0, 1, 1}), Polynomial({0, 1, 1}), 1) == 4);
    CHECK(se_step(Polynomial::identity(), 1) == 1);
    CHECK(se_step(Polynomial::monomial(3), 1) == 15);
    CHECK(se_step(Polynomial({-1, 0, 1}, Rational(1, 2)), 1) == 1);
    CHECK(se_step(Polynomial::monomial(2), 2) == 12);
}

TEST_CASE("perfect-square scales fold into coefficients") {
    Polynomial p({0, 1}, 4);
    CHECK(p.scale_sq() == 1);
    CHECK(p.coeffs()[1] == 2);
    Polynomial q({0, 1}, 2);
    CHECK(q.coefficient(1).square() == 2);
    CHECK(q.coefficient_double(1) == doctest::Approx(1.41421356237));
}

TEST_CASE("normalized variance") {
    for (int d = 1; d <= 6; ++d) CHECK(se_step(Polynomial::monomial(d).normalized_variance(), 1) == 1);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("2.5e-1") == Rational(1, 4));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(-1) == 1);
    CHECK(falling_factorial(5, 3) == 60);
}
