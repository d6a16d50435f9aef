#include "ampwick/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ampwick/counterexample.hpp"
#include "ampwick/diagnostics.hpp"
#include "ampwick/labeling.hpp"
#include "ampwick/oracle.hpp"
#include "ampwick/partitions.hpp"
#include "ampwick/spiked.hpp"
#include "ampwick/state_evolution.hpp"
#include "ampwick/tree_gen.hpp"
#include "ampwick/tree_io.hpp"
#include "ampwick/wick.hpp"

namespace ampwick {

namespace {

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Polynomial poly(std::vector<Rational> c, Rational scale_sq = 1) { return Polynomial(std::move(c), scale_sq); }

Polynomial hermite2_normalized() { return poly({-1, 0, 1}, Rational(1, 2)); }

// Degree <= 3 nonlinearities, monomial and mixed.
std::vector<Polynomial> identity_family() {
    return {poly({0, 1}),
            poly({0, 0, 1}),
            poly({0, 0, 0, 1}),
            poly({0, 1, 1}),
            poly({0, -3, 0, 1}),
            hermite2_normalized(),
            poly({Rational(1, 2), 1, 0, -2}),
            poly({3})};
}

CriterionResult c1() {
    CriterionResult r{1, "two-tree pairing count", false, "", 0};
    auto t1 = UnlabeledTree::from_canonical("((()()()())(()))");
    auto t2 = UnlabeledTree::from_canonical("((()())(()()(()())))");
    Integer w = wick_multi({t1, t2});
    r.passed = w == 45;
    r.detail = "wick_multi = " + to_string(w) + " (expected 45)";
    return r;
}

CriterionResult c2() {
    CriterionResult r{2, "L = Wick on trees with <= 12 edges, degree <= 3", false, "", 0};
    WickCache cache;
    long checked = 0, bad = 0;
    std::string first;
    for (const auto& s : canonical_trees_up_to(12, 3)) {
        Rational l = se_functional(UnlabeledTree::from_canonical(s));
        Integer w = wick_count(s, &cache);
        ++checked;
        if (l != Rational(w)) {
            if (!bad++) first = s + ": L = " + to_string(l) + ", Wick = " + to_string(w);
        }
    }
    r.passed = bad == 0;
    r.detail = std::to_string(checked) + " trees, " + std::to_string(bad) + " mismatches" +
               (first.empty() ? "" : "; first " + first);
    return r;
}

CriterionResult c3() {
    CriterionResult r{3, "Delta = 0 classes = Wick on trees with <= 10 edges", false, "", 0};
    WickCache cache;
    long checked = 0, bad = 0;
    std::string first;
    for (const auto& s : canonical_trees_up_to(10)) {
        Integer n = count_delta_zero_classes(UnlabeledTree::from_canonical(s));
        Integer w = wick_count(s, &cache);
        ++checked;
        if (n != w && !bad++) first = s + ": classes = " + to_string(n) + ", Wick = " + to_string(w);
    }
    r.passed = bad == 0;
    r.detail = std::to_string(checked) + " trees, " + std::to_string(bad) + " mismatches" +
               (first.empty() ? "" : "; first " + first);
    return r;
}

CriterionResult c4(const VerifyOptions& opt) {
    CriterionResult r{4, "tree moment sum = tau^2m (2m-1)!!", false, "", 0};
    const auto fam = identity_family();
    long checked = 0, bad = 0;
    std::string first;
    auto check = [&](const std::vector<Polynomial>& F, int t, const Rational& tau0) {
        SEState se = se_sequence(F, t, tau0 * tau0);
        for (int power = 1; power <= 4; ++power) {
            Rational got = tree_moment_sum(F, t, power, tau0, opt.budget);
            Rational want = predicted_moment(se.tau2.back(), power);
            ++checked;
            if (got != want && !bad++) {
                first = "t=" + std::to_string(t) + " power=" + std::to_string(power) + " F=";
                for (const auto& f : F) first += "[" + to_string(f) + "]";
                first += ": " + to_string(got) + " vs " + to_string(want);
            }
        }
    };
    const Polynomial z = Polynomial::identity();
    for (const Rational& tau0 : {Rational(1), Rational(3, 2)}) {
        check({z}, 1, tau0);
        for (const auto& f1 : fam) check({z, f1}, 2, tau0);
    }
    for (const auto& f1 : fam)
        for (const auto& f2 : fam) check({z, f1, f2}, 3, 1);
    r.passed = bad == 0;
    r.detail = std::to_string(checked) + " (F, t, power) cases incl. odd powers, " + std::to_string(bad) +
               " mismatches" + (first.empty() ? "" : "; first " + first);
    return r;
}

CriterionResult c5() {
    CriterionResult r{5, "closed-form Delta = 0 count for monomial F", false, "", 0};
    long checked = 0, bad = 0;
    std::string first;
    auto check = [&](int two_m, const std::vector<int>& d) {
        std::vector<Polynomial> F{Polynomial::identity()};
        for (int x : d) F.push_back(Polynomial::monomial(x));
        const int t = static_cast<int>(d.size()) + 1;
        auto trees = expand_iterate(F, t, two_m);
        Integer enumerated = count_delta_zero_classes_dp(trees.at(0).tree);
        Integer closed = monomial_count(two_m / 2, d);
        ++checked;
        if (enumerated != closed && !bad++) {
            first = "2m=" + std::to_string(two_m) + " d=";
            for (int x : d) first += std::to_string(x) + ",";
            first += " enumerated " + to_string(enumerated) + " vs " + to_string(closed);
        }
    };
    for (int two_m : {2, 4}) {
        check(two_m, {});
        for (int d1 = 1; d1 <= 3; ++d1) {
            check(two_m, {d1});
            for (int d2 = 1; d2 <= 3; ++d2) check(two_m, {d1, d2});
        }
    }
    Integer spot = monomial_count(1, {3});
    r.passed = bad == 0 && spot == 15;
    r.detail = std::to_string(checked) + " monomial cases, " + std::to_string(bad) + " mismatches; spot (m=1, d=3) = " +
               to_string(spot) + (first.empty() ? "" : "; first " + first);
    return r;
}

CriterionResult c6(const VerifyOptions& opt) {
    CriterionResult r{6, "finite-N exactness of the tree expansion", false, "", 0};
    const Polynomial z = Polynomial::identity();
    std::vector<std::vector<Polynomial>> grid{{z}};
    for (auto f : {poly({0, 1}), poly({0, 0, 1}), poly({0, 0, 0, 1}), poly({1, 1, -1}), poly({0, -3, 0, 1})})
        grid.push_back({z, f});

    long exact_cases = 0, exact_bad = 0;
    std::string first;
    for (const auto& F : grid) {
        const int t = static_cast<int>(F.size());
        for (int m = 1; m <= 3; ++m)
            for (int N = 2; N <= 4; ++N) {
                Rational oracle = exact_moment_rademacher(F, t, m, N).value;
                Rational trees = tree_sum_expectation(F, t, m, N, opt.budget).value;
                ++exact_cases;
                if (oracle != trees && !exact_bad++)
                    first = "t=" + std::to_string(t) + " m=" + std::to_string(m) + " N=" + std::to_string(N) +
                            " F=[" + to_string(F.back()) + "]: exact " + to_string(oracle) + " vs tree sum " +
                            to_string(trees);
            }
    }

    struct Expanded {
        const std::vector<Polynomial>* F;
        int t, m;
        std::vector<WeightedTree> trees;
    };
    std::vector<Expanded> expanded;
    for (const auto& F : grid)
        for (int m = 1; m <= 3; ++m)
            expanded.push_back({&F, static_cast<int>(F.size()), m, expand_iterate(F, static_cast<int>(F.size()), m)});

    long real_cases = 0, real_bad = 0;
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const int N = 2 + k % 3;
        Rng rng(trial_seed(opt.seed, 600 + static_cast<std::uint64_t>(k)));
        Matrix A = sample_matrix(N, Ensemble::Gaussian, rng);
        std::vector<double> ones(static_cast<std::size_t>(N), 1.0);
        for (const auto& e : expanded) {
            double x = run_amp(A, *e.F, ones, e.t, OnsagerMode::Exact).back()[0];
            double direct = std::pow(x, e.m);
            double sum = 0.0;
            for (const auto& wt : e.trees) sum += wt.weight.to_double() * labeled_sum(wt.tree, A, ones, 1);
            double rel = std::abs(sum - direct) / std::max(1.0, std::abs(direct));
            worst = std::max(worst, rel);
            ++real_cases;
            if (rel > 1e-9) ++real_bad;
        }
    }
    r.passed = exact_bad == 0 && real_bad == 0;
    r.detail = "exact grid " + std::to_string(exact_cases - exact_bad) + "/" + std::to_string(exact_cases) +
               " equal; per-realization " + std::to_string(real_cases - real_bad) + "/" +
               std::to_string(real_cases) + " within 1e-9 (worst rel err " + fmt("%.3g", worst) + ")" +
               (first.empty() ? "" : "; first mismatch " + first);
    return r;
}

CriterionResult c7() {
    CriterionResult r{7, "falling-factorial partition identity", false, "", 0};
    long bad = 0;
    for (int k = 1; k <= 8; ++k)
        for (long N = 1; N <= 50; ++N)
            if (!falling_factorial_identity_check(N, k)) ++bad;
    r.passed = bad == 0;
    r.detail = "400 (k, N) cases, " + std::to_string(bad) + " failures";
    return r;
}

AMPConfig montecarlo_config(const VerifyOptions& opt) {
    AMPConfig c = opt.montecarlo ? *opt.montecarlo : desk_scale_config(opt.seed, opt.jobs);
    c.moments = {1, 2, 4};
    return c;
}

CriterionResult c8(const VerifyOptions& opt) {
    CriterionResult r{8, "desk-scale moments match state evolution", false, "", 0};
    AMPConfig cfg = montecarlo_config(opt);
    ExperimentReport rep = monte_carlo(cfg);
    SEState se = se_sequence(cfg.F, cfg.t_max, cfg.tau0_sq());
    bool ok = true;
    std::ostringstream d;
    d << "N=" << cfg.N << " trials=" << cfg.trials << " " << to_string(cfg.ensemble) << ";";
    for (int t = 1; t <= std::min(cfg.t_max, 3); ++t) {
        const double tau2 = se.tau2[static_cast<std::size_t>(t)].get_d();
        const double m1 = rep.find(t, 1)->empirical, m2 = rep.find(t, 2)->empirical, m4 = rep.find(t, 4)->empirical;
        ok = ok && std::abs(m1) <= 0.05 && std::abs(m2 - tau2) <= 0.05 && std::abs(m4 - 3 * tau2 * tau2) <= 0.3;
        d << " t=" << t << ": M1=" << fmt("%.4f", m1) << " M2=" << fmt("%.4f", m2) << " M4=" << fmt("%.4f", m4) << ";";
    }
    r.passed = ok;
    r.detail = d.str();
    return r;
}

CriterionResult c9(const VerifyOptions& opt) {
    CriterionResult r{9, "universality across matrix ensembles", false, "", 0};
    AMPConfig base = montecarlo_config(opt);
    base.moments = {2};
    const Ensemble ens[3] = {Ensemble::Gaussian, Ensemble::Rademacher, Ensemble::UniformScaled};
    std::vector<ExperimentReport> reps;
    for (int e = 0; e < 3; ++e) {
        AMPConfig c = base;
        c.ensemble = ens[e];
        c.seed = base.seed + static_cast<std::uint64_t>(e);
        reps.push_back(monte_carlo(c));
    }
    bool ok = true;
    std::ostringstream d;
    for (int t = 1; t <= std::min(base.t_max, 3); ++t) {
        d << "t=" << t << ":";
        for (int a = 0; a < 3; ++a) {
            const auto* x = reps[static_cast<std::size_t>(a)].find(t, 2);
            d << " " << to_string(ens[a]) << "=" << fmt("%.4f", x->empirical) << "+-" << fmt("%.4f", x->stderr_);
            for (int b = a + 1; b < 3; ++b) {
                const auto* y = reps[static_cast<std::size_t>(b)].find(t, 2);
                double se = std::sqrt(x->stderr_ * x->stderr_ + y->stderr_ * y->stderr_);
                if (std::abs(x->empirical - y->empirical) > 2 * se) {
                    ok = false;
                    d << " [" << to_string(ens[a]) << " vs " << to_string(ens[b]) << " off by "
                      << fmt("%.2f", std::abs(x->empirical - y->empirical) / se) << " SE]";
                }
            }
        }
        d << "; ";
    }
    r.passed = ok;
    r.detail = d.str();
    return r;
}

CriterionResult c10(const VerifyOptions& opt) {
    CriterionResult r{10, "E[sum Val] near Wick at N = 1000", false, "", 0};
    bool ok = true;
    std::ostringstream d;
    for (const char* s : {"(()())", "(()()()())", "((()()())(()()()))"}) {
        auto t = UnlabeledTree::from_canonical(s);
        double w = wick_count(t).get_d();
        MeanEstimate est = algebra_monte_carlo(t, 1000, 200, Ensemble::Gaussian, opt.seed, opt.jobs);
        bool pass = std::abs(est.mean - w) <= 3 * est.stderr_;
        ok = ok && pass;
        d << s << ": Wick=" << w << " mean=" << fmt("%.3f", est.mean) << "+-" << fmt("%.3f", est.stderr_)
          << (pass ? "" : " (outside 3 SE)") << "; ";
    }
    r.passed = ok;
    r.detail = d.str();
    return r;
}

CriterionResult c11() {
    CriterionResult r{11, "counterexample exponent crossing", false, "", 0};
    bool ok = true;
    std::ostringstream d;
    const int limit = 200;
    for (int D : {2, 4, 8})
        for (double log_n : {20.0, 50.0, 100.0}) {
            int cross = exponent_crossing(log_n, D, 2, limit);
            bool single = cross > 0;
            for (int t = 1; t <= limit && single; ++t) {
                double e = exponent_lower_bound(log_n, D, t, 2);
                if ((t < cross && !(e < 0)) || (t >= cross && !(e > 0))) single = false;
            }
            double ref = failure_threshold(log_n, D) + 9;
            double ratio = cross / ref;
            bool window = failure_threshold(log_n, D) < log_n / std::log(static_cast<double>(D));
            bool unit = se_step(normalized_monomial(D), 1) == 1;
            bool pass = single && ratio >= 0.25 && ratio <= 4 && window && unit;
            ok = ok && pass;
            d << "D=" << D << " logN=" << log_n << ": cross=" << cross << " ratio=" << fmt("%.2f", ratio)
              << (pass ? "" : " FAIL") << "; ";
        }
    r.passed = ok;
    r.detail = d.str();
    return r;
}

CriterionResult c12(const VerifyOptions& opt) {
    CriterionResult r{12, "excess and bad-subtree invariants", false, "", 0};
    Rng rng(trial_seed(opt.seed, 1200));
    const int n = 10000;
    long fails[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    long zero = 0, nonempty = 0;
    for (int k = 0; k < n; ++k) {
        LabeledTree t = random_valid_labeled_tree(10, rng);
        TreeDiagnostics dg = diagnose(t);
        const Rational& delta = dg.excess;
        long big_labels = 0, big_pairs = 0;
        for (auto [l, c] : dg.label_multiplicities)
            if (c >= 3) big_labels += c;
        for (auto [p, c] : dg.edge_multiplicities)
            if (c > 2) big_pairs += c;
        if (sgn(delta) < 0) ++fails[0];
        if (dg.count(EdgeClass::T3) > 2 * delta) ++fails[1];
        if (big_labels > 6 * delta) ++fails[2];
        if (dg.root_extra > 2 * delta) ++fails[3];
        if (big_pairs > 6 * delta) ++fails[4];
        if (sgn(delta) == 0) {
            ++zero;
            if (dg.bad_pairs != 0 || !dg.bad.empty()) ++fails[5];
        }
        if (!dg.bad.empty()) {
            ++nonempty;
            const auto& bv = dg.bad.boundary_vertices;
            for (int v : bv) {
                bool paired = false;
                for (int w : bv)
                    if (w != v && t.label(w) == t.label(v)) paired = true;
                if (!paired) {
                    ++fails[6];
                    break;
                }
            }
            for (int v : bv)
                if (std::find(dg.bad.bad_vertices.begin(), dg.bad.bad_vertices.end(), v) != dg.bad.bad_vertices.end()) {
                    ++fails[7];
                    break;
                }
        }
    }
    const char* names[8] = {"Delta<0", "T3>2Delta", "sumN_i>6Delta", "M_r>2Delta", "sumb_ij>6Delta",
                            "Delta=0 with bad structure", "unpaired boundary", "bad boundary vertex"};
    std::ostringstream d;
    d << n << " trees (" << zero << " with Delta=0, " << nonempty << " with nonempty bad subtree); violations:";
    bool ok = true;
    for (int i = 0; i < 8; ++i) {
        d << " " << names[i] << "=" << fails[i];
        ok = ok && fails[i] == 0;
    }
    r.passed = ok;
    r.detail = d.str();
    return r;
}

CriterionResult c13() {
    CriterionResult r{13, "spiked Wick smoke tests", false, "", 0};
    WickCache cache;
    long checked = 0, bad = 0;
    for (const auto& s : canonical_trees_up_to(8)) {
        auto t = UnlabeledTree::from_canonical(s);
        double w = wick_count(s, &cache).get_d();
        for (int N : {1, 7, 100}) {
            ++checked;
            if (spiked_wick(all_blue(t), SpikeConfig::ones(1.5, N), 1) != w) ++bad;
        }
    }
    long leaf_bad = 0;
    ColoredTree y = all_blue(star_tree(1));
    y.color[1] = EdgeColor::Yellow;
    for (double lambda : {1.5, 0.3, 2.0})
        for (int N : {1, 3, 7, 100, 1000})
            if (spiked_wick(y, SpikeConfig::ones(lambda, N), 1) != lambda) ++leaf_bad;
    r.passed = bad == 0 && leaf_bad == 0;
    r.detail = "all-blue: " + std::to_string(checked) + " (tree, N) cases, " + std::to_string(bad) +
               " mismatches; yellow leaf: 15 (lambda, N) cases, " + std::to_string(leaf_bad) + " mismatches";
    return r;
}

double time_limit(int id) {
    switch (id) {
        case 1: return 1;
        case 2: return 300;
        case 3: return 300;
        case 4: return 600;
        case 7: return 60;
        case 8: return 600;
        case 12: return 120;
        default: return 0;
    }
}

}  // namespace

Suite parse_suite(const std::string& s) {
    if (s == "algebra") return Suite::Algebra;
    if (s == "identities") return Suite::Identities;
    if (s == "oracle") return Suite::Oracle;
    if (s == "montecarlo") return Suite::MonteCarlo;
    if (s == "all") return Suite::All;
    throw std::invalid_argument("unknown suite \"" + s + "\"");
}

const char* to_string(Suite s) {
    switch (s) {
        case Suite::Algebra: return "algebra";
        case Suite::Identities: return "identities";
        case Suite::Oracle: return "oracle";
        case Suite::MonteCarlo: return "montecarlo";
        default: return "all";
    }
}

std::vector<int> suite_criteria(Suite s) {
    switch (s) {
        case Suite::Algebra: return {1, 2, 3, 12, 13};
        case Suite::Identities: return {4, 5, 7, 11};
        case Suite::Oracle: return {6};
        case Suite::MonteCarlo: return {8, 9, 10};
        default: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    }
}

AMPConfig desk_scale_config(std::uint64_t seed, int jobs) {
    AMPConfig c;
    c.N = 4000;
    c.t_max = 3;
    c.F = {Polynomial::identity(), hermite2_normalized(), hermite2_normalized()};
    c.ensemble = Ensemble::Gaussian;
    c.trials = 50;
    c.seed = seed;
    c.jobs = jobs;
    c.moments = {1, 2, 4};
    return c;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = c1(); break;
            case 2: r = c2(); break;
            case 3: r = c3(); break;
            case 4: r = c4(opt); break;
            case 5: r = c5(); break;
            case 6: r = c6(opt); break;
            case 7: r = c7(); break;
            case 8: r = c8(opt); break;
            case 9: r = c9(opt); break;
            case 10: r = c10(opt); break;
            case 11: r = c11(); break;
            case 12: r = c12(opt); break;
            case 13: r = c13(); break;
            default: throw std::invalid_argument("no criterion " + std::to_string(id));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double limit = time_limit(id);
    if (limit > 0 && r.seconds > limit) {
        r.passed = false;
        r.detail += " [runtime " + fmt("%.1f", r.seconds) + " s over " + fmt("%.0f", limit) + " s]";
    }
    return r;
}

std::vector<CriterionResult> run_suite(Suite s, const VerifyOptions& opt,
                                       const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(s)) {
        out.push_back(run_criterion(id, opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace ampwick
