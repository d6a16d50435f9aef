#include "ampwick/amp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ampwick/errors.hpp"
#include "ampwick/labeling.hpp"
#include "ampwick/state_evolution.hpp"

namespace ampwick {

namespace {

struct Neumaier {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) c += (sum - t) + x;
        else c += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + c; }
};

// Runs fn(i) for i in [0, n) on `jobs` threads.
template <class Fn>
void parallel_for(long n, int jobs, Fn fn) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (jobs == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (long i = w; i < n; i += jobs) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct Stats {
    double mean, stderr_;
};

Stats stats(const std::vector<double>& xs) {
    Neumaier s;
    for (double x : xs) s.add(x);
    double mean = s.value() / static_cast<double>(xs.size());
    if (xs.size() < 2) return {mean, 0.0};
    Neumaier v;
    for (double x : xs) v.add((x - mean) * (x - mean));
    double var = v.value() / static_cast<double>(xs.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(xs.size()))};
}

std::vector<int> moments_or_default(const AMPConfig& c, std::vector<int> ms) {
    if (ms.empty()) ms = c.moments;
    if (ms.empty()) throw std::invalid_argument("no moments requested");
    return ms;
}

ExperimentReport assemble(const AMPConfig& config, const std::vector<int>& ms,
                          const std::vector<std::vector<double>>& per_sample, bool with_stderr) {
    // per_sample[k][(t-1)*|ms| + j] = M_{t, ms[j]} for sample k
    ExperimentReport rep;
    rep.config = config;
    rep.samples = static_cast<long>(per_sample.size());
    SEState se = se_sequence(config.F, config.t_max, config.tau0_sq());
    for (int t = 1; t <= config.t_max; ++t)
        for (std::size_t j = 0; j < ms.size(); ++j) {
            std::vector<double> xs;
            for (const auto& s : per_sample) xs.push_back(s[static_cast<std::size_t>(t - 1) * ms.size() + j]);
            Stats st = stats(xs);
            MomentEntry e;
            e.t = t;
            e.m = ms[j];
            e.empirical = st.mean;
            e.stderr_ = with_stderr ? st.stderr_ : 0.0;
            e.predicted = predicted_moment(se.tau2[static_cast<std::size_t>(t)], ms[j]).get_d();
            e.abs_error = std::abs(e.empirical - e.predicted);
            e.pass = e.abs_error <= std::max(config.tol_abs, config.z * e.stderr_);
            rep.entries.push_back(e);
        }
    return rep;
}

std::vector<double> sample_moments(const std::vector<std::vector<double>>& xs, const std::vector<int>& ms) {
    std::vector<double> out;
    for (const auto& x : xs) {
        auto m = empirical_moments(x, ms);
        for (int k : ms) out.push_back(m[k]);
    }
    return out;
}

}  // namespace

void AMPConfig::validate() const {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    if (static_cast<int>(F.size()) < t_max) throw std::invalid_argument("F must provide f_0..f_{t_max-1}");
    if (!F.at(0).is_identity()) throw std::invalid_argument("f_0 must be the identity");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    for (int m : moments)
        if (m < 0) throw std::invalid_argument("moments must be nonnegative");
    if (init.kind == InitSpec::Kind::SubGaussianIID && sgn(init.tau0_sq) < 0)
        throw std::invalid_argument("tau0_sq must be nonnegative");
}

const char* to_string(Ensemble e) {
    switch (e) {
        case Ensemble::Gaussian: return "gaussian";
        case Ensemble::Rademacher: return "rademacher";
        default: return "uniform_scaled";
    }
}

const char* to_string(OnsagerMode m) {
    switch (m) {
        case OnsagerMode::Exact: return "exact";
        case OnsagerMode::Disabled: return "disabled";
        default: return "mean_field";
    }
}

Ensemble parse_ensemble(const std::string& s) {
    if (s == "gaussian") return Ensemble::Gaussian;
    if (s == "rademacher") return Ensemble::Rademacher;
    if (s == "uniform_scaled" || s == "uniform") return Ensemble::UniformScaled;
    throw std::invalid_argument("unknown ensemble '" + s + "'");
}

OnsagerMode parse_onsager(const std::string& s) {
    if (s == "exact") return OnsagerMode::Exact;
    if (s == "disabled") return OnsagerMode::Disabled;
    if (s == "mean_field") return OnsagerMode::MeanField;
    throw std::invalid_argument("unknown onsager mode '" + s + "'");
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Matrix sample_matrix(int N, Ensemble ensemble, Rng& rng) {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    Matrix A(N);
    const double sd = 1.0 / std::sqrt(static_cast<double>(N));
    std::normal_distribution<double> gauss(0.0, sd);
    std::uniform_real_distribution<double> unif(-std::sqrt(3.0) * sd, std::sqrt(3.0) * sd);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            double a;
            switch (ensemble) {
                case Ensemble::Gaussian: a = gauss(rng); break;
                case Ensemble::Rademacher: a = coin(rng) ? sd : -sd; break;
                default: a = unif(rng); break;
            }
            A(i, j) = a;
            A(j, i) = a;
        }
    return A;
}

std::vector<double> initial_vector(const InitSpec& init, int N, Rng& rng) {
    std::vector<double> x(static_cast<std::size_t>(N), 1.0);
    if (init.kind == InitSpec::Kind::SubGaussianIID) {
        std::normal_distribution<double> g(0.0, std::sqrt(init.tau0_sq.get_d()));
        for (auto& v : x) v = g(rng);
    }
    return x;
}

std::vector<std::vector<double>> run_amp(const Matrix& A, const std::vector<Polynomial>& F,
                                         const std::vector<double>& x0, int t_max, OnsagerMode onsager) {
    const int n = A.size();
    if (static_cast<int>(x0.size()) != n) throw DimensionMismatch("x0 length differs from matrix size");
    if (static_cast<int>(F.size()) < t_max) throw std::invalid_argument("F must provide f_0..f_{t_max-1}");
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::vector<double>> iterates;
    std::vector<double> prev, cur = x0;
    for (int s = 0; s < t_max; ++s) {
        const Polynomial& f = F[static_cast<std::size_t>(s)];
        std::vector<double> fx(N), dfx(N);
        Polynomial df = derivative(f);
        for (std::size_t i = 0; i < N; ++i) {
            fx[i] = eval(f, cur[i]);
            dfx[i] = eval(df, cur[i]);
        }
        std::vector<double> next = multiply(A, fx);
        if (s > 0 && onsager != OnsagerMode::Disabled) {
            const Polynomial& fp = F[static_cast<std::size_t>(s - 1)];
            if (onsager == OnsagerMode::Exact) {
                for (int i = 0; i < n; ++i) {
                    const double* row = A.row(i);
                    double b = 0.0;
                    for (int j = 0; j < n; ++j) b += row[j] * row[j] * dfx[static_cast<std::size_t>(j)];
                    next[static_cast<std::size_t>(i)] -= b * eval(fp, prev[static_cast<std::size_t>(i)]);
                }
            } else {
                double b = 0.0;
                for (double d : dfx) b += d;
                b /= static_cast<double>(n);
                for (std::size_t i = 0; i < N; ++i) next[i] -= b * eval(fp, prev[i]);
            }
        }
        for (double v : next)
            if (!std::isfinite(v)) throw NonFinite(s + 1);
        prev = std::move(cur);
        cur = next;
        iterates.push_back(std::move(next));
    }
    return iterates;
}

std::map<int, double> empirical_moments(const std::vector<double>& x, const std::vector<int>& ms) {
    std::map<int, double> out;
    for (int m : ms) {
        Neumaier s;
        for (double v : x) s.add(std::pow(v, m));
        out[m] = x.empty() ? 0.0 : s.value() / static_cast<double>(x.size());
    }
    return out;
}

bool ExperimentReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const MomentEntry& e) { return e.pass; });
}

const MomentEntry* ExperimentReport::find(int t, int m) const {
    for (const auto& e : entries)
        if (e.t == t && e.m == m) return &e;
    return nullptr;
}

ExperimentReport monte_carlo(const AMPConfig& config, std::vector<int> ms) {
    config.validate();
    ms = moments_or_default(config, ms);
    std::vector<std::vector<double>> per_trial(static_cast<std::size_t>(config.trials));
    parallel_for(config.trials, config.jobs, [&](long k) {
        Rng rng(trial_seed(config.seed, static_cast<std::uint64_t>(k)));
        Matrix A = sample_matrix(config.N, config.ensemble, rng);
        std::vector<double> x0 = initial_vector(config.init, config.N, rng);
        try {
            per_trial[static_cast<std::size_t>(k)] =
                sample_moments(run_amp(A, config.F, x0, config.t_max, config.onsager), ms);
        } catch (const NonFinite& e) {
            throw NonFinite(e.step, k);
        }
    });
    return assemble(config, ms, per_trial, true);
}

ExperimentReport exhaustive_rademacher(const AMPConfig& config, std::vector<int> ms) {
    config.validate();
    if (config.N > 6) throw TooLarge("exhaustive mode needs N <= 6");
    if (config.init.kind != InitSpec::Kind::AllOnes) throw std::invalid_argument("exhaustive mode needs all-ones init");
    ms = moments_or_default(config, ms);
    const int n = config.N;
    const int pairs = n * (n - 1) / 2;
    const double sd = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<std::vector<double>> per_pattern;
    std::vector<double> x0(static_cast<std::size_t>(n), 1.0);
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        Matrix A(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit) {
                double a = (mask >> bit) & 1 ? -sd : sd;
                A(i, j) = a;
                A(j, i) = a;
            }
        per_pattern.push_back(sample_moments(run_amp(A, config.F, x0, config.t_max, config.onsager), ms));
    }
    ExperimentReport rep = assemble(config, ms, per_pattern, false);
    rep.mode = "exhaustive_rademacher";
    return rep;
}

MeanEstimate algebra_monte_carlo(const UnlabeledTree& t, int N, int trials, Ensemble ensemble, std::uint64_t seed,
                                 int jobs) {
    std::vector<double> vals(static_cast<std::size_t>(trials));
    std::vector<double> ones(static_cast<std::size_t>(N), 1.0);
    parallel_for(trials, jobs, [&](long k) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(k)));
        Matrix A = sample_matrix(N, ensemble, rng);
        vals[static_cast<std::size_t>(k)] = labeled_sum(t, A, ones, 1);
    });
    Stats st = stats(vals);
    return {st.mean, st.stderr_, trials};
}

}  // namespace ampwick
