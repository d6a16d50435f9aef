#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ampwick/expansion.hpp"
#include "ampwick/polynomial.hpp"

namespace ampwick {

struct ExactExpectation {
    Rational value;
    Integer enumeration_size;
};

// a + b*sqrt(d) with rational a, b and a fixed positive integer d.
class QuadraticSurd {
  public:
    QuadraticSurd(long d = 1, Rational a = 0, Rational b = 0) : d_(d), a_(std::move(a)), b_(std::move(b)) {}

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long radicand() const { return d_; }
    // Throws std::domain_error unless the value is rational.
    Rational to_rational() const;

    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o);
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

  private:
    long d_;
    Rational a_, b_;
};

// E[(x_1^t)^m] under the Rademacher ensemble with x^0 = all ones, by running
// AMP exactly on every sign pattern.  Needs rational coefficients and N <= 5.
ExactExpectation exact_moment_rademacher(const std::vector<Polynomial>& F, int t, int m, int N);

// Expectation of the tree expansion of (x_1^t)^m under the same ensemble,
// summed over non-backtracking labelings grouped by their label partition.
ExactExpectation tree_sum_expectation(const std::vector<Polynomial>& F, int t, int m, int N,
                                      std::size_t budget = kDefaultBudget);

// Restricted growth strings of length k.
void enumerate_set_partitions(int k, const std::function<void(const std::vector<int>&)>& visit);

// sum over partitions sigma of [k] of (-1)^{k-|sigma|} prod_B (|B|-1)! N^{|sigma|}
Integer falling_factorial_partition_sum(long N, int k);
bool falling_factorial_identity_check(long N, int k);

}  // namespace ampwick
