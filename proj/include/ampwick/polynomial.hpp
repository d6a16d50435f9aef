#pragma once

#include <string>
#include <vector>

#include "ampwick/rational.hpp"

namespace ampwick {

// f(z) = sqrt(scale_sq) * sum_d c_d z^d with rational c_d.  A perfect-square
// scale is folded into the coefficients, so scale_sq != 1 only for genuinely
// irrational normalizations such as (z^2 - 1)/sqrt(2).
class Polynomial {
  public:
    Polynomial();
    explicit Polynomial(std::vector<Rational> coeffs, Rational scale_sq = 1);

    static Polynomial identity();
    static Polynomial monomial(int d, Rational c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }
    bool is_identity() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& scale_sq() const { return scale_sq_; }

    RootRational coefficient(int d) const;
    double coefficient_double(int d) const;

    // Rescaled so that se_step(result, 1) == 1; the zero polynomial is unchanged.
    Polynomial normalized_variance() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_ && a.scale_sq_ == b.scale_sq_;
    }

  private:
    std::vector<Rational> coeffs_;
    Rational scale_sq_{1};
    std::vector<double> dcoeffs_;
};

std::string to_string(const Polynomial& p);

double eval(const Polynomial& p, double x);
Polynomial derivative(const Polynomial& p);

// E[Z^k] for standard Gaussian Z.
Integer gaussian_moment(long k);

// E[f(tau Z) g(tau Z)], tau2 = tau^2.
Rational gaussian_inner(const Polynomial& f, const Polynomial& g, const Rational& tau2);

Rational se_step(const Polynomial& f, const Rational& tau2);

}  // namespace ampwick
