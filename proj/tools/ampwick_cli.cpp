#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ampwick/amp.hpp"
#include "ampwick/config.hpp"
#include "ampwick/counterexample.hpp"
#include "ampwick/diagnostics.hpp"
#include "ampwick/errors.hpp"
#include "ampwick/oracle.hpp"
#include "ampwick/spiked.hpp"
#include "ampwick/state_evolution.hpp"
#include "ampwick/tree_io.hpp"
#include "ampwick/verify.hpp"
#include "ampwick/wick.hpp"

using namespace ampwick;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
    std::string config;
    std::string out;
    std::string csv;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    std::size_t budget = kDefaultBudget;
};

struct Run {
    RunManifest manifest;
    const Common* common;

    Run(const std::string& command, const Common& c) : common(&c) {
        manifest.command = command;
        manifest.started = iso_timestamp_now();
    }

    // Prints the result and writes it with its manifest to --out if given.
    int emit(const json& result, int status, json echo = json::object()) {
        manifest.config_echo = std::move(echo);
        manifest.finished = iso_timestamp_now();
        manifest.exit_status = status;
        if (!common->out.empty()) write_text_file(common->out, with_manifest(manifest, result).dump(2) + "\n");
        return status;
    }
};

Rational tau0_from(const std::string& s) { return parse_rational(s); }

json rational_json(const Rational& q) { return to_string(q); }

int cmd_simulate(const Common& c, bool exhaustive) {
    Run run(exhaustive ? "simulate --exhaustive" : "simulate", c);
    if (c.config.empty()) throw ConfigError("simulate needs --config");
    AMPConfig cfg = load_config(c.config);
    if (c.seed) cfg.seed = *c.seed;
    cfg.jobs = c.jobs;
    ExperimentReport rep = exhaustive ? exhaustive_rademacher(cfg) : monte_carlo(cfg);
    std::printf("%3s %3s %14s %12s %14s %12s %5s\n", "t", "m", "empirical", "stderr", "predicted", "abs_error",
                "pass");
    for (const auto& e : rep.entries)
        std::printf("%3d %3d %14.6f %12.6f %14.6f %12.6f %5s\n", e.t, e.m, e.empirical, e.stderr_, e.predicted,
                    e.abs_error, e.pass ? "yes" : "no");
    int status = rep.all_pass() ? kPass : kFail;
    if (!c.csv.empty()) write_text_file(c.csv, report_csv(rep));
    return run.emit(to_json(rep), status, to_json(cfg));
}

struct SeArgs {
    std::string poly_file;
    int t = 1;
    std::string tau0 = "1";
    std::string M;
    int two_m = 2;
};

int cmd_se(const Common& c, const SeArgs& a) {
    Run run("se", c);
    if (a.poly_file.empty()) throw ConfigError("se needs --poly-file");
    auto F = load_polynomials(a.poly_file);
    std::optional<Rational> M;
    if (!a.M.empty()) M = parse_rational(a.M);
    Rational tau0 = tau0_from(a.tau0);
    SEState s = se_sequence(F, a.t, tau0 * tau0, M);
    json j = to_json(s);
    std::cout << j.dump(2) << "\n";
    for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
    return run.emit(j, kPass, {{"F", to_json(F)}, {"t", a.t}, {"tau0", a.tau0}});
}

int cmd_tree_sum(const Common& c, const SeArgs& a) {
    Run run("se tree-sum", c);
    auto F = load_polynomials(a.poly_file);
    Rational tau0 = tau0_from(a.tau0);
    Rational sum = tree_moment_sum(F, a.t, a.two_m, tau0, c.budget);
    SEState s = se_sequence(F, a.t, tau0 * tau0);
    Rational pred = predicted_moment(s.tau2.back(), a.two_m);
    json j = {{"tree_sum", rational_json(sum)}, {"predicted", rational_json(pred)}, {"equal", sum == pred}};
    std::cout << j.dump(2) << "\n";
    return run.emit(j, sum == pred ? kPass : kFail,
                    {{"F", to_json(F)}, {"t", a.t}, {"tau0", a.tau0}, {"power", a.two_m}, {"budget", c.budget}});
}

int cmd_wick(const Common& c, const std::string& what, const std::string& file) {
    Run run("wick " + what, c);
    ParsedTree p = read_tree_file(file);
    json echo = {{"tree_file", file}, {"tree", format_tree(p.tree)}};
    if (what == "count") {
        Integer w = wick_count(p.tree);
        std::cout << to_string(w) << "\n";
        return run.emit({{"wick", to_string(w)}}, kPass, echo);
    }
    Rational l = se_functional(p.tree);
    if (what == "se") {
        std::cout << to_string(l) << "\n";
        return run.emit({{"L", to_string(l)}}, kPass, echo);
    }
    Integer w = wick_count(p.tree);
    bool eq = l == Rational(w);
    json j = {{"wick", to_string(w)}, {"L", to_string(l)}, {"equal", eq}};
    std::cout << j.dump(2) << "\n";
    return run.emit(j, eq ? kPass : kFail, echo);
}

int cmd_tree_check(const Common& c, const std::string& file) {
    Run run("tree check", c);
    ParsedTree p = read_tree_file(file);
    LabeledTree t = to_labeled(p);
    json j = to_json(diagnose(t));
    j["non_backtracking"] = is_non_backtracking(t);
    std::cout << j.dump(2) << "\n";
    return run.emit(j, kPass, {{"tree_file", file}, {"tree", format_tree(t.base, &t.labels)}});
}

int cmd_oracle(const Common& c, int t, int m, int n, const std::string& poly_file) {
    Run run("oracle cross-check", c);
    auto F = load_polynomials(poly_file);
    Rational oracle = exact_moment_rademacher(F, t, m, n).value;
    Rational trees = tree_sum_expectation(F, t, m, n, c.budget).value;
    json j = {{"oracle", to_string(oracle)}, {"tree_sum", to_string(trees)}, {"equal", oracle == trees}};
    std::cout << j.dump(2) << "\n";
    return run.emit(j, oracle == trees ? kPass : kFail,
                    {{"F", to_json(F)}, {"t", t}, {"m", m}, {"n", n}, {"budget", c.budget}});
}

int cmd_regime(const Common& c, double log_n, int D, int t, int m, double M, double K1) {
    Run run("regime", c);
    json j = to_json(regime_classify(log_n, D, t, M, K1, m));
    std::cout << j.dump(2) << "\n";
    return run.emit(j, kPass, {{"logN", log_n}, {"D", D}, {"t", t}, {"m", m}, {"M", M}, {"K1", K1}});
}

int cmd_spiked(const Common& c, const std::string& file, double lambda, const std::string& vstar, int n, int root) {
    Run run("spiked wick", c);
    ParsedTree p = read_tree_file(file);
    SpikeConfig cfg;
    if (vstar == "ones") {
        cfg = SpikeConfig::ones(lambda, n);
    } else {
        cfg.lambda = lambda;
        cfg.v_star = read_json_file(vstar).get<std::vector<double>>();
        cfg.validate();
    }
    double v = spiked_wick(colored(p), cfg, root);
    std::printf("%.17g\n", v);
    return run.emit({{"spiked_wick", v}}, kPass,
                    {{"tree_file", file}, {"lambda", lambda}, {"vstar", vstar}, {"n", cfg.N()}, {"root", root}});
}

int cmd_verify(const Common& c, const std::string& suite_name) {
    Run run("verify " + suite_name, c);
    Suite suite = parse_suite(suite_name);
    VerifyOptions opt;
    opt.jobs = c.jobs;
    opt.budget = c.budget;
    if (c.seed) opt.seed = *c.seed;
    json echo = {{"suite", suite_name}, {"seed", opt.seed}, {"jobs", opt.jobs}, {"budget", opt.budget}};
    if (!c.config.empty()) {
        opt.montecarlo = load_config(c.config);
        opt.montecarlo->jobs = c.jobs;
        if (c.seed) opt.montecarlo->seed = *c.seed;
        echo["montecarlo"] = to_json(*opt.montecarlo);
    }
    json rows = json::array();
    bool all = true;
    std::printf("%-4s %-6s %9s  %s\n", "id", "result", "seconds", "criterion");
    run_suite(suite, opt, [&](const CriterionResult& r) {
        all = all && r.passed;
        std::printf("%-4d %-6s %9.2f  %s\n     %s\n", r.id, r.passed ? "PASS" : "FAIL", r.seconds, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                        {"seconds", r.seconds}});
    });
    return run.emit({{"criteria", rows}, {"all_pass", all}}, all ? kPass : kFail, echo);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial AMP, tree expansions and Wick counts"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    Common c;
    app.add_option("--config", c.config, "JSON configuration file")->envname("AMPWICK_CONFIG");
    app.add_option("--out", c.out, "write the JSON result with its manifest here")->envname("AMPWICK_OUT");
    app.add_option("--csv", c.csv, "write the moment table as CSV (simulate)")->envname("AMPWICK_CSV");
    app.add_option("--seed", c.seed, "master seed")->envname("AMPWICK_SEED");
    app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->envname("AMPWICK_JOBS");
    app.add_option("--budget", c.budget, "maximum number of expansion trees")
        ->check(CLI::PositiveNumber)
        ->envname("AMPWICK_BUDGET");

    std::function<int()> action;

    auto* sim = app.add_subcommand("simulate", "run AMP and compare moments with state evolution");
    bool exhaustive = false;
    sim->add_flag("--exhaustive", exhaustive, "average over all Rademacher sign patterns (N <= 6)");
    sim->callback([&] { action = [&] { return cmd_simulate(c, exhaustive); }; });

    SeArgs se_args;
    auto add_se_options = [&](CLI::App* s, bool with_power) {
        s->add_option("--poly-file", se_args.poly_file, "JSON list of polynomials f_0, f_1, ...")->required();
        s->add_option("--t", se_args.t, "iteration")->required()->check(CLI::PositiveNumber);
        s->add_option("--tau0", se_args.tau0, "tau_0 as a rational, e.g. 1 or 3/2");
        if (with_power) s->add_option("--two-m", se_args.two_m, "moment order")->check(CLI::NonNegativeNumber);
        else s->add_option("--M", se_args.M, "bound M to validate against");
    };
    auto* se = app.add_subcommand("se", "state-evolution variances");
    se->fallthrough();
    add_se_options(se, false);
    auto* tree_sum = se->add_subcommand("tree-sum", "exact sum over expansion trees of Wick counts");
    tree_sum->fallthrough();
    add_se_options(tree_sum, true);
    se->callback([&] {
        if (!tree_sum->parsed()) action = [&] { return cmd_se(c, se_args); };
    });
    tree_sum->callback([&] { action = [&] { return cmd_tree_sum(c, se_args); }; });
    se->get_option("--poly-file")->required(false);
    se->get_option("--t")->required(false);

    auto* wick = app.add_subcommand("wick", "Wick counts of tree files");
    wick->require_subcommand(1);
    wick->fallthrough();
    std::string tree_file;
    for (const char* what : {"count", "se", "check"}) {
        auto* s = wick->add_subcommand(what);
        s->fallthrough();
        s->add_option("file", tree_file, "tree file")->required();
        std::string w = what;
        s->callback([&, w] { action = [&, w] { return cmd_wick(c, w, tree_file); }; });
    }

    auto* tree = app.add_subcommand("tree", "labeled tree diagnostics");
    tree->require_subcommand(1);
    tree->fallthrough();
    auto* tree_check = tree->add_subcommand("check");
    tree_check->fallthrough();
    tree_check->add_option("file", tree_file, "labeled tree file")->required();
    tree_check->callback([&] { action = [&] { return cmd_tree_check(c, tree_file); }; });

    auto* oracle = app.add_subcommand("oracle", "exact small-N expectations");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    auto* cross = oracle->add_subcommand("cross-check");
    cross->fallthrough();
    int o_t = 1, o_m = 2, o_n = 3;
    std::string o_poly;
    cross->add_option("--t", o_t)->required()->check(CLI::PositiveNumber);
    cross->add_option("--m", o_m)->required()->check(CLI::NonNegativeNumber);
    cross->add_option("--n", o_n)->required()->check(CLI::Range(2, 5));
    cross->add_option("--poly-file", o_poly)->required();
    cross->callback([&] { action = [&] { return cmd_oracle(c, o_t, o_m, o_n, o_poly); }; });

    auto* regime = app.add_subcommand("regime", "counterexample regime classification");
    regime->fallthrough();
    double r_logn = 20, r_M = 1, r_K1 = 21;
    int r_d = 4, r_t = 1, r_m = 2;
    regime->add_option("--logN", r_logn)->required()->check(CLI::PositiveNumber);
    regime->add_option("--d", r_d)->required()->check(CLI::Range(2, 1 << 20));
    regime->add_option("--t", r_t)->required()->check(CLI::PositiveNumber);
    regime->add_option("--m", r_m)->check(CLI::PositiveNumber);
    regime->add_option("--M", r_M)->check(CLI::PositiveNumber);
    regime->add_option("--K1", r_K1);
    regime->callback([&] { action = [&] { return cmd_regime(c, r_logn, r_d, r_t, r_m, r_M, r_K1); }; });

    auto* spiked = app.add_subcommand("spiked", "spiked Wick products");
    spiked->require_subcommand(1);
    spiked->fallthrough();
    auto* sw = spiked->add_subcommand("wick");
    sw->fallthrough();
    double s_lambda = 1.0;
    std::string s_vstar = "ones";
    int s_n = 100, s_root = 1;
    sw->add_option("file", tree_file, "colored tree file")->required();
    sw->add_option("--lambda", s_lambda);
    sw->add_option("--vstar", s_vstar, "\"ones\" or a JSON array file");
    sw->add_option("--n", s_n, "dimension for --vstar ones")->check(CLI::PositiveNumber);
    sw->add_option("--root", s_root, "root index (1-based)")->check(CLI::PositiveNumber);
    sw->callback([&] { action = [&] { return cmd_spiked(c, tree_file, s_lambda, s_vstar, s_n, s_root); }; });

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->fallthrough();
    std::string suite = "all";
    verify->add_option("suite", suite, "algebra | identities | oracle | montecarlo | all")
        ->required()
        ->check(CLI::IsMember({"algebra", "identities", "oracle", "montecarlo", "all"}));
    verify->callback([&] { action = [&] { return cmd_verify(c, suite); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    if (!action) {
        std::cerr << app.help();
        return kUsage;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
