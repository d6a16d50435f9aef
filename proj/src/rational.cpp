#include "ampwick/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace ampwick {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + text);
        if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return q;
    }
    // Decimal literal, read exactly.
    std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(s.substr(exp + 1));
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant = mant.substr(1);
    }
    auto d = mant.find('.');
    std::string digits = mant;
    if (d != std::string::npos) {
        e10 -= static_cast<long>(mant.size() - d - 1);
        digits = mant.substr(0, d) + mant.substr(d + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad number: " + text);
    Integer num(digits, 10);
    Integer ten = 10, scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
    Rational q = e10 < 0 ? Rational(num, scale) : Rational(num * scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

Integer double_factorial(long n) {
    Integer r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

Integer falling_factorial(long n, long k) {
    Integer r = 1;
    for (long j = 0; j < k; ++j) r *= (n - j);
    return r;
}

bool exact_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    Rational c = q;
    c.canonicalize();
    if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t()))
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

Rational sqrt_exact(const Rational& q) {
    Rational r;
    if (!exact_sqrt(q, r)) throw std::domain_error("sqrt(" + to_string(q) + ") is not rational");
    return r;
}

Rational pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

double RootRational::to_double() const { return value.get_d() * std::sqrt(radicand.get_d()); }

Rational RootRational::exact() const {
    if (sgn(value) == 0) return 0;
    return value * sqrt_exact(radicand);
}

RootRational& RootRational::operator*=(const RootRational& o) {
    value *= o.value;
    radicand *= o.radicand;
    // Pull perfect-square radicands into the value to keep them small.
    Rational r;
    if (sgn(radicand) != 0 && radicand != 1 && exact_sqrt(radicand, r)) {
        value *= r;
        radicand = 1;
    }
    return *this;
}

bool operator==(const RootRational& a, const RootRational& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return sgn(a.value) == sgn(b.value) && a.square() == b.square();
}

std::string to_string(const RootRational& r) {
    if (r.radicand == 1 || r.is_zero()) return to_string(r.is_zero() ? Rational(0) : r.value);
    Rational s;
    if (exact_sqrt(r.radicand, s)) return to_string(Rational(r.value * s));
    return to_string(r.value) + "*sqrt(" + to_string(r.radicand) + ")";
}

}  // namespace ampwick
