#include "ampwick/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace ampwick {

Polynomial::Polynomial() : coeffs_{Rational(0)}, dcoeffs_{0.0} {}

Polynomial::Polynomial(std::vector<Rational> coeffs, Rational scale_sq)
    : coeffs_(std::move(coeffs)), scale_sq_(std::move(scale_sq)) {
    if (sgn(scale_sq_) < 0) throw std::invalid_argument("negative scale_sq");
    scale_sq_.canonicalize();
    for (auto& c : coeffs_) c.canonicalize();
    Rational root;
    if (sgn(scale_sq_) == 0) {
        coeffs_.clear();
        scale_sq_ = 1;
    } else if (scale_sq_ != 1 && exact_sqrt(scale_sq_, root)) {
        for (auto& c : coeffs_) c *= root;
        scale_sq_ = 1;
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    if (coeffs_.empty()) {
        coeffs_.push_back(0);
        scale_sq_ = 1;
    }
    double s = std::sqrt(scale_sq_.get_d());
    for (const auto& c : coeffs_) dcoeffs_.push_back(c.get_d() * s);
}

Polynomial Polynomial::identity() { return Polynomial({0, 1}); }

Polynomial Polynomial::monomial(int d, Rational c) {
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1, Rational(0));
    cs.back() = std::move(c);
    return Polynomial(std::move(cs));
}

bool Polynomial::is_identity() const {
    return scale_sq_ == 1 && coeffs_.size() == 2 && sgn(coeffs_[0]) == 0 && coeffs_[1] == 1;
}

RootRational Polynomial::coefficient(int d) const {
    if (d < 0 || d > degree()) return RootRational(0);
    return RootRational(coeffs_[static_cast<std::size_t>(d)], scale_sq_);
}

double Polynomial::coefficient_double(int d) const {
    if (d < 0 || d > degree()) return 0.0;
    return dcoeffs_[static_cast<std::size_t>(d)];
}

Polynomial Polynomial::normalized_variance() const {
    if (is_zero()) return *this;
    Rational base = se_step(Polynomial(coeffs_), 1);
    return Polynomial(coeffs_, 1 / base);
}

std::string to_string(const Polynomial& p) {
    std::string s;
    for (int d = 0; d <= p.degree(); ++d) {
        const auto& c = p.coeffs()[static_cast<std::size_t>(d)];
        if (sgn(c) == 0 && p.degree() > 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")";
        if (d >= 1) s += "z";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    if (p.scale_sq() != 1) s = "sqrt(" + to_string(p.scale_sq()) + ") * [" + s + "]";
    return s;
}

double eval(const Polynomial& p, double x) {
    double acc = 0.0;
    for (int d = p.degree(); d >= 0; --d) acc = acc * x + p.coefficient_double(d);
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) return Polynomial();
    std::vector<Rational> cs;
    for (int d = 1; d <= p.degree(); ++d) cs.push_back(p.coeffs()[static_cast<std::size_t>(d)] * d);
    return Polynomial(std::move(cs), p.scale_sq());
}

Integer gaussian_moment(long k) {
    if (k < 0) throw std::invalid_argument("negative moment order");
    if (k % 2) return 0;
    return double_factorial(k - 1);
}

Rational gaussian_inner(const Polynomial& f, const Polynomial& g, const Rational& tau2) {
    if (sgn(tau2) < 0) throw std::invalid_argument("tau2 < 0");
    if (f.is_zero() || g.is_zero()) return 0;
    Rational acc = 0;
    for (int a = 0; a <= f.degree(); ++a) {
        const auto& fa = f.coeffs()[static_cast<std::size_t>(a)];
        if (sgn(fa) == 0) continue;
        for (int b = 0; b <= g.degree(); ++b) {
            if ((a + b) % 2) continue;
            const auto& gb = g.coeffs()[static_cast<std::size_t>(b)];
            if (sgn(gb) == 0) continue;
            acc += fa * gb * pow(tau2, static_cast<unsigned long>((a + b) / 2)) *
                   Rational(double_factorial(a + b - 1));
        }
    }
    if (f.scale_sq() == 1 && g.scale_sq() == 1) return acc;
    return acc * sqrt_exact(f.scale_sq() * g.scale_sq());
}

Rational se_step(const Polynomial& f, const Rational& tau2) { return gaussian_inner(f, f, tau2); }

}  // namespace ampwick
