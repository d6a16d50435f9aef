#pragma once

#include <gmpxx.h>

#include <string>

namespace ampwick {

using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "3", "-1/2" and decimal literals such as "0.25".
Rational parse_rational(const std::string& text);

// n!! with (-1)!! = 1; returns 1 for n <= 0.
Integer double_factorial(long n);

Integer falling_factorial(long n, long k);

// Exact square root of a nonnegative rational if it is a perfect square.
bool exact_sqrt(const Rational& q, Rational& root);
Rational sqrt_exact(const Rational& q);  // throws std::domain_error

Rational pow(const Rational& q, unsigned long e);

// value * sqrt(radicand), used for products of coefficients carrying an
// irrational normalization.
struct RootRational {
    Rational value{1};
    Rational radicand{1};

    RootRational() = default;
    RootRational(Rational v) : value(std::move(v)) {}
    RootRational(Rational v, Rational r) : value(std::move(v)), radicand(std::move(r)) {}

    bool is_zero() const { return sgn(value) == 0 || sgn(radicand) == 0; }
    double to_double() const;
    // Throws std::domain_error when the radicand is not a perfect square.
    Rational exact() const;
    Rational square() const { return value * value * radicand; }

    RootRational& operator*=(const RootRational& o);
    friend RootRational operator*(RootRational a, const RootRational& b) { return a *= b; }
    friend bool operator==(const RootRational& a, const RootRational& b);
};

std::string to_string(const RootRational& r);

}  // namespace ampwick
