#include "doctest.h"

#include <cmath>

#include "ampwick/amp.hpp"
#include "ampwick/errors.hpp"
#include "ampwick/expansion.hpp"
#include "ampwick/labeling.hpp"

using namespace ampwick;

TEST_CASE("sampled matrices") {
    for (Ensemble e : {Ensemble::Gaussian, Ensemble::Rademacher, Ensemble::UniformScaled}) {
        Rng rng(3);
        Matrix A = sample_matrix(6, e, rng);
        CHECK(A.is_symmetric());
        for (int i = 0; i < 6; ++i) CHECK(A(i, i) == 0.0);
    }
    Rng rng(5);
    Matrix R = sample_matrix(4, Ensemble::Rademacher, rng);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(R(i, j)) == 0.5);
    Rng a(9), b(9);
    Matrix X = sample_matrix(5, Ensemble::Gaussian, a), Y = sample_matrix(5, Ensemble::Gaussian, b);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(X(i, j) == Y(i, j));
}

TEST_CASE("run_amp on a 2x2 matrix") {
    const double a = 0.7;
    Matrix A(2);
    A(0, 1) = A(1, 0) = a;
    auto z = Polynomial::identity();
    auto cube = Polynomial::monomial(3);
    auto xs = run_amp(A, {z, cube}, {1, 1}, 2, OnsagerMode::Exact);
    CHECK(xs[0][0] == doctest::Approx(a));
    CHECK(xs[0][1] == doctest::Approx(a));
    // x^2 = A (x^1)^3 - (A o A) 3 (x^1)^2 * x^0
    CHECK(xs[1][0] == doctest::Approx(a * a * a * a - a * a * 3 * a * a));
    auto sq = Polynomial::monomial(2);
    CHECK(run_amp(A, {z, sq}, {1, 1}, 2, OnsagerMode::Exact)[1][0] == doctest::Approx(-a * a * a));
    CHECK(run_amp(A, {z, sq}, {1, 1}, 2, OnsagerMode::Disabled)[1][0] == doctest::Approx(a * a * a));
    CHECK(run_amp(A, {z, z}, {1, 1}, 2, OnsagerMode::Exact)[1][0] == doctest::Approx(0.0));
    Matrix H(2);
    H(0, 1) = H(1, 0) = 1e200;
    CHECK_THROWS_AS(run_amp(H, {z, cube}, {1, 1}, 2, OnsagerMode::Exact), NonFinite);
}

TEST_CASE("empirical moments") {
    auto m = empirical_moments({1, 2, 3}, {2});
    CHECK(m[2] == doctest::Approx(14.0 / 3));
    CHECK(empirical_moments({2.5, 2.5, 2.5}, {3})[3] == doctest::Approx(15.625));
    CHECK(empirical_moments({1, -1}, {3})[3] == 0.0);
}

TEST_CASE("monte carlo is deterministic and job-count independent") {
    AMPConfig c;
    c.N = 300;
    c.t_max = 2;
    c.trials = 6;
    c.seed = 17;
    auto r1 = monte_carlo(c);
    c.jobs = 3;
    auto r3 = monte_carlo(c);
    REQUIRE(r1.entries.size() == r3.entries.size());
    for (std::size_t k = 0; k < r1.entries.size(); ++k) CHECK(r1.entries[k].empirical == r3.entries[k].empirical);
    const auto* m2 = r1.find(2, 2);
    REQUIRE(m2);
    CHECK(m2->predicted == 1.0);
    CHECK(std::abs(m2->empirical - 1.0) < 0.2);
}

TEST_CASE("exhaustive Rademacher mean") {
    AMPConfig c;
    c.N = 3;
    c.t_max = 1;
    c.F = {Polynomial::identity()};
    c.moments = {2};
    auto r = exhaustive_rademacher(c);
    CHECK(r.samples == 8);
    CHECK(r.find(1, 2)->empirical == doctest::Approx(2.0 / 3));
}

TEST_CASE("config validation") {
    AMPConfig c;
    c.N = 1;
    CHECK_THROWS(c.validate());
    c = AMPConfig{};
    c.F = {Polynomial::monomial(2)};
    CHECK_THROWS(c.validate());
    CHECK(parse_ensemble("rademacher") == Ensemble::Rademacher);
    CHECK_THROWS(parse_onsager("none"));
}

TEST_CASE("quadratic step differs from the tree sum by a cubic remainder") {
    // For f_1 = z^2 the non-backtracking tree sum misses -sum_j A_ij^3.
    auto z = Polynomial::identity();
    std::vector<Polynomial> F{z, Polynomial::monomial(2)};
    auto trees = expand_iterate(F, 2, 1);
    REQUIRE(trees.size() == 1);
    Rng rng(21);
    for (int N : {2, 3, 5}) {
        Matrix A = sample_matrix(N, Ensemble::Gaussian, rng);
        std::vector<double> ones(static_cast<std::size_t>(N), 1.0);
        double x = run_amp(A, F, ones, 2, OnsagerMode::Exact)[1][0];
        double cubes = 0.0;
        for (int j = 0; j < N; ++j) cubes += A(0, j) * A(0, j) * A(0, j);
        CHECK(x == doctest::Approx(labeled_sum(trees[0].tree, A, ones, 1) - cubes).epsilon(1e-12));
    }
}
