#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ampwick/matrix.hpp"
#include "ampwick/polynomial.hpp"
#include "ampwick/random.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

enum class Ensemble { Gaussian, Rademacher, UniformScaled };
enum class OnsagerMode { Exact, Disabled, MeanField };

struct InitSpec {
    enum class Kind { AllOnes, SubGaussianIID } kind = Kind::AllOnes;
    Rational tau0_sq = 1;  // used by SubGaussianIID (Gaussian entries)

    friend bool operator==(const InitSpec& a, const InitSpec& b) {
        return a.kind == b.kind && (a.kind == Kind::AllOnes || a.tau0_sq == b.tau0_sq);
    }
};

struct AMPConfig {
    int N = 1000;
    int t_max = 3;
    std::vector<Polynomial> F{Polynomial::identity(), Polynomial::identity(), Polynomial::identity()};
    Ensemble ensemble = Ensemble::Gaussian;
    InitSpec init;
    std::uint64_t seed = 0;
    int trials = 10;
    OnsagerMode onsager = OnsagerMode::Exact;
    std::vector<int> moments{1, 2, 4};
    double tol_abs = 0.05;
    double z = 3.0;
    int jobs = 1;

    void validate() const;
    Rational tau0_sq() const { return init.kind == InitSpec::Kind::AllOnes ? Rational(1) : init.tau0_sq; }
    friend bool operator==(const AMPConfig&, const AMPConfig&) = default;
};

const char* to_string(Ensemble e);
const char* to_string(OnsagerMode m);
Ensemble parse_ensemble(const std::string& s);
OnsagerMode parse_onsager(const std::string& s);

Matrix sample_matrix(int N, Ensemble ensemble, Rng& rng);
std::vector<double> initial_vector(const InitSpec& init, int N, Rng& rng);

// Returns x^1 .. x^{t_max}; F[s] is applied at step s.  Throws NonFinite.
std::vector<std::vector<double>> run_amp(const Matrix& A, const std::vector<Polynomial>& F,
                                         const std::vector<double>& x0, int t_max, OnsagerMode onsager);

// (1/N) sum_i x_i^m with compensated summation.
std::map<int, double> empirical_moments(const std::vector<double>& x, const std::vector<int>& ms);

struct MomentEntry {
    int t = 0;
    int m = 0;
    double empirical = 0.0;
    double stderr_ = 0.0;
    double predicted = 0.0;
    double abs_error = 0.0;
    bool pass = false;
};

struct ExperimentReport {
    AMPConfig config;
    std::string mode = "monte_carlo";
    long samples = 0;  // trials, or sign patterns in exhaustive mode
    std::vector<MomentEntry> entries;

    bool all_pass() const;
    const MomentEntry* find(int t, int m) const;
};

// Trials run on config.jobs workers; per-trial results are reduced in trial
// order, so the report does not depend on the worker count.
ExperimentReport monte_carlo(const AMPConfig& config, std::vector<int> ms = {});

// Mean of M_{t,m} over all 2^{N(N-1)/2} Rademacher sign patterns (N <= 6).
ExperimentReport exhaustive_rademacher(const AMPConfig& config, std::vector<int> ms = {});

struct MeanEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    int samples = 0;
};

// Mean over sampled matrices of the sum over non-backtracking labelings of
// Val(T) (root label 1, x0 = all ones).
MeanEstimate algebra_monte_carlo(const UnlabeledTree& t, int N, int trials, Ensemble ensemble,
                                 std::uint64_t seed, int jobs = 1);

}  // namespace ampwick
