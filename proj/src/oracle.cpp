#include "ampwick/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ampwick/errors.hpp"
#include "ampwick/partitions.hpp"

namespace ampwick {

Rational QuadraticSurd::to_rational() const {
    if (sgn(b_) == 0) return a_;
    Rational r;
    if (!exact_sqrt(Rational(d_), r)) throw std::domain_error("value is irrational");
    return a_ + b_ * r;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    Rational a = a_ * o.a_ + b_ * o.b_ * d_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

namespace {

void check_rational_coeffs(const std::vector<Polynomial>& F, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (static_cast<int>(F.size()) < t) throw std::invalid_argument("F must provide f_0..f_{t-1}");
    if (!F[0].is_identity()) throw std::invalid_argument("f_0 must be the identity");
    for (int s = 0; s < t; ++s)
        if (F[static_cast<std::size_t>(s)].scale_sq() != 1)
            throw std::invalid_argument("exact Rademacher oracle needs rational coefficients");
}

QuadraticSurd eval_surd(const Polynomial& p, const QuadraticSurd& x) {
    QuadraticSurd acc(x.radicand());
    for (int d = p.degree(); d >= 0; --d) {
        acc *= x;
        acc += QuadraticSurd(x.radicand(), p.coeffs()[static_cast<std::size_t>(d)]);
    }
    return acc;
}

}  // namespace

ExactExpectation exact_moment_rademacher(const std::vector<Polynomial>& F, int t, int m, int N) {
    if (N > 5) throw TooLarge("exact Rademacher enumeration needs N <= 5");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    check_rational_coeffs(F, t);
    const int pairs = N * (N - 1) / 2;
    const auto n = static_cast<std::size_t>(N);
    const Rational inv_n(1, N);
    std::vector<Polynomial> dF;
    for (int s = 0; s < t; ++s) dF.push_back(derivative(F[static_cast<std::size_t>(s)]));

    QuadraticSurd total(N);
    std::vector<std::vector<QuadraticSurd>> A(n, std::vector<QuadraticSurd>(n, QuadraticSurd(N)));
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        int bit = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++bit) {
                QuadraticSurd a(N, 0, (mask >> bit) & 1 ? Rational(-inv_n) : inv_n);
                A[i][j] = a;
                A[j][i] = a;
            }
        std::vector<QuadraticSurd> prev, cur(n, QuadraticSurd(N, 1));
        for (int s = 0; s < t; ++s) {
            std::vector<QuadraticSurd> fx(n, QuadraticSurd(N)), dfx(n, QuadraticSurd(N));
            for (std::size_t i = 0; i < n; ++i) {
                fx[i] = eval_surd(F[static_cast<std::size_t>(s)], cur[i]);
                dfx[i] = eval_surd(dF[static_cast<std::size_t>(s)], cur[i]);
            }
            std::vector<QuadraticSurd> next(n, QuadraticSurd(N));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) next[i] += A[i][j] * fx[j];
                if (s > 0) {
                    // A_ij^2 = 1/N off the diagonal.
                    QuadraticSurd b(N);
                    for (std::size_t j = 0; j < n; ++j)
                        if (i != j) b += dfx[j];
                    b *= QuadraticSurd(N, inv_n);
                    next[i] -= b * eval_surd(F[static_cast<std::size_t>(s - 1)], prev[i]);
                }
            }
            prev = std::move(cur);
            cur = std::move(next);
        }
        QuadraticSurd p(N, 1);
        for (int k = 0; k < m; ++k) p *= cur[0];
        total += p;
    }
    Integer patterns = Integer(1) << pairs;
    return {total.to_rational() / Rational(patterns), patterns};
}

ExactExpectation tree_sum_expectation(const std::vector<Polynomial>& F, int t, int m, int N, std::size_t budget) {
    if (N > 5) throw TooLarge("tree-sum oracle needs N <= 5");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    ExactExpectation out{0, 0};
    for (const auto& wt : expand_iterate(F, t, m, budget)) {
        const UnlabeledTree& tr = wt.tree;
        const int edges = tr.edge_count();
        Rational tree_total = 0;
        // Self-loop partitions carry a factor A_ii = 0 and are skipped.
        enumerate_classes(
            tr,
            [&](const IsomorphismClass& c) {
            Integer labelings = falling_factorial(N - 1, c.block_count() - 1);
            out.enumeration_size += labelings;
            std::map<std::pair<int, int>, int> b;
            for (int v = 1; v < tr.size(); ++v)
                ++b[std::minmax(c.block[static_cast<std::size_t>(tr.parent(v))], c.block[static_cast<std::size_t>(v)])];
            for (const auto& [p, k] : b)
                if (k % 2) return;
            // E[prod A] = prod_pairs N^{-b/2} = N^{-edges/2}; x^0 = 1.
            tree_total += Rational(labelings) / pow(Rational(N), static_cast<unsigned long>(edges / 2));
            },
            N, true);
        if (sgn(tree_total) != 0) out.value += wt.weight.exact() * tree_total;
    }
    return out;
}

void enumerate_set_partitions(int k, const std::function<void(const std::vector<int>&)>& visit) {
    if (k < 0) throw std::invalid_argument("negative size");
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int blocks) -> void {
        if (pos == k) {
            visit(rgs);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(blocks, b + 1));
        }
    };
    if (k == 0) visit(rgs);
    else rec(rec, 1, 1);
}

Integer falling_factorial_partition_sum(long N, int k) {
    Integer total = 0;
    enumerate_set_partitions(k, [&](const std::vector<int>& rgs) {
        std::vector<long> size;
        for (int b : rgs) {
            if (b >= static_cast<int>(size.size())) size.resize(static_cast<std::size_t>(b) + 1, 0);
            ++size[static_cast<std::size_t>(b)];
        }
        Integer term = 1;
        for (long s : size)
            for (long j = 2; j < s; ++j) term *= j;
        Integer np;
        mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(N), size.size());
        term *= np;
        if ((k - static_cast<int>(size.size())) % 2) total -= term;
        else total += term;
    });
    return total;
}

bool falling_factorial_identity_check(long N, int k) {
    if (k < 1 || k > 8 || N < 0 || N > 50) throw std::invalid_argument("need 1 <= k <= 8 and 0 <= N <= 50");
    return falling_factorial(N, k) == falling_factorial_partition_sum(N, k);
}

}  // namespace ampwick
