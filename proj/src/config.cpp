#include "ampwick/config.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

namespace ampwick {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_number_float()) return parse_rational(j.dump());
    throw ConfigError("expected a number or \"num/den\" string, got " + j.dump());
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Polynomial polynomial_from_json(const json& j) {
    if (j.is_array()) {
        std::vector<Rational> c;
        for (const auto& x : j) c.push_back(rational_from_json(x));
        if (c.empty()) throw ConfigError("empty coefficient list");
        return Polynomial(std::move(c));
    }
    if (!j.is_object()) throw ConfigError("polynomial must be an array or object, got " + j.dump());
    check_keys(j, {"coeffs", "scale_sq", "normalize_variance"}, "polynomial");
    if (!j.contains("coeffs")) throw ConfigError("polynomial object needs \"coeffs\"");
    Polynomial base = polynomial_from_json(j.at("coeffs"));
    Rational s = j.contains("scale_sq") ? rational_from_json(j.at("scale_sq")) : Rational(1);
    if (sgn(s) < 0) throw ConfigError("scale_sq must be nonnegative");
    Polynomial p(base.coeffs(), s);
    if (j.value("normalize_variance", false)) p = p.normalized_variance();
    return p;
}

json to_json(const Polynomial& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_string(x));
    return {{"coeffs", c}, {"scale_sq", to_string(p.scale_sq())}};
}

std::vector<Polynomial> polynomials_from_json(const json& j) {
    const json& list = j.is_object() && j.contains("F") ? j.at("F") : j;
    if (!list.is_array()) throw ConfigError("expected a list of polynomials");
    std::vector<Polynomial> F;
    for (const auto& p : list) F.push_back(polynomial_from_json(p));
    return F;
}

json to_json(const std::vector<Polynomial>& F) {
    json a = json::array();
    for (const auto& p : F) a.push_back(to_json(p));
    return a;
}

AMPConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    check_keys(j,
               {"N", "t_max", "F", "ensemble", "init", "seed", "trials", "onsager", "moments", "tol_abs", "z",
                "jobs"},
               "config");
    AMPConfig c;
    try {
        if (j.contains("N")) c.N = j.at("N").get<int>();
        if (j.contains("t_max")) c.t_max = j.at("t_max").get<int>();
        if (j.contains("F")) c.F = polynomials_from_json(j.at("F"));
        if (j.contains("ensemble")) c.ensemble = parse_ensemble(j.at("ensemble").get<std::string>());
        if (j.contains("init")) {
            const json& i = j.at("init");
            check_keys(i, {"kind", "tau0_sq"}, "init");
            std::string kind = i.value("kind", "all_ones");
            if (kind == "all_ones") {
                c.init.kind = InitSpec::Kind::AllOnes;
            } else if (kind == "subgaussian_iid") {
                c.init.kind = InitSpec::Kind::SubGaussianIID;
                if (i.contains("tau0_sq")) c.init.tau0_sq = rational_from_json(i.at("tau0_sq"));
            } else {
                throw ConfigError("unknown init kind \"" + kind + "\"");
            }
        }
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials")) c.trials = j.at("trials").get<int>();
        if (j.contains("onsager")) c.onsager = parse_onsager(j.at("onsager").get<std::string>());
        if (j.contains("moments")) c.moments = j.at("moments").get<std::vector<int>>();
        if (j.contains("tol_abs")) c.tol_abs = j.at("tol_abs").get<double>();
        if (j.contains("z")) c.z = j.at("z").get<double>();
        if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
        c.validate();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

json to_json(const AMPConfig& c) {
    json init = {{"kind", c.init.kind == InitSpec::Kind::AllOnes ? "all_ones" : "subgaussian_iid"}};
    if (c.init.kind == InitSpec::Kind::SubGaussianIID) init["tau0_sq"] = to_string(c.init.tau0_sq);
    return {{"N", c.N},
            {"t_max", c.t_max},
            {"F", to_json(c.F)},
            {"ensemble", to_string(c.ensemble)},
            {"init", init},
            {"seed", c.seed},
            {"trials", c.trials},
            {"onsager", to_string(c.onsager)},
            {"moments", c.moments},
            {"tol_abs", c.tol_abs},
            {"z", c.z},
            {"jobs", c.jobs}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

AMPConfig load_config(const std::string& path) {
    try {
        return config_from_json(read_json_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::vector<Polynomial> load_polynomials(const std::string& path) {
    try {
        return polynomials_from_json(read_json_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

json to_json(const ExperimentReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"t", e.t},
                           {"m", e.m},
                           {"empirical", e.empirical},
                           {"stderr", e.stderr_},
                           {"predicted", e.predicted},
                           {"abs_error", e.abs_error},
                           {"pass", e.pass}});
    return {{"mode", r.mode},
            {"samples", r.samples},
            {"config", to_json(r.config)},
            {"entries", entries},
            {"all_pass", r.all_pass()}};
}

std::string report_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out << "t,m,empirical,stderr,predicted,abs_error,pass\n";
    for (const auto& e : r.entries)
        out << e.t << ',' << e.m << ',' << fmt(e.empirical) << ',' << fmt(e.stderr_) << ','
            << fmt(e.predicted) << ',' << fmt(e.abs_error) << ',' << (e.pass ? "true" : "false") << '\n';
    return out.str();
}

json to_json(const SEState& s) {
    json tau2 = json::array();
    for (const auto& x : s.tau2) tau2.push_back(to_string(x));
    json j = {{"tau2", tau2}, {"assumption_holds", s.assumption_holds}, {"warnings", s.warnings}};
    j["bound_M"] = s.bound_M ? json(to_string(*s.bound_M)) : json(nullptr);
    return j;
}

json to_json(const TreeDiagnostics& d) {
    json classes = json::array();
    for (auto c : d.edge_classes) classes.push_back(to_string(c));
    json labels = json::array();
    for (auto [l, n] : d.label_multiplicities) labels.push_back({{"label", l}, {"count", n}});
    json pairs = json::array();
    for (auto [p, n] : d.edge_multiplicities) pairs.push_back({{"i", p.first}, {"j", p.second}, {"count", n}});
    auto edges = [](const std::vector<std::pair<int, int>>& es) {
        json a = json::array();
        for (auto [u, v] : es) a.push_back({u, v});
        return a;
    };
    json bad = {{"bad_vertices", d.bad.bad_vertices},
                {"branch_vertices", d.bad.branch_vertices},
                {"boundary_vertices", d.bad.boundary_vertices},
                {"branch_edges", edges(d.bad.branch_edges)},
                {"boundary_edges", edges(d.bad.boundary_edges)},
                {"boundary_pairs", edges(d.bad.boundary_pairs)}};
    return {{"excess", to_string(d.excess)},
            {"excess_value", d.excess.get_d()},
            {"edge_order", d.edge_order},
            {"edge_classes", classes},
            {"T1", d.count(EdgeClass::T1)},
            {"T2", d.count(EdgeClass::T2)},
            {"T3", d.count(EdgeClass::T3)},
            {"label_multiplicities", labels},
            {"edge_multiplicities", pairs},
            {"root_extra", d.root_extra},
            {"bad_pairs", d.bad_pairs},
            {"passes_filter", d.passes_filter},
            {"bad_subtree", bad}};
}

json to_json(const RegimeReport& r) {
    return {{"log_n", r.log_n},
            {"D", r.D},
            {"m", r.m},
            {"t", r.t},
            {"M", r.M},
            {"K1", r.K1},
            {"C_D", r.C_D},
            {"exponent_lower_bound", r.exponent_lower_bound},
            {"threshold_t", r.threshold_t},
            {"valid_limit", r.valid_limit},
            {"window_limit", r.window_limit},
            {"verdict", to_string(r.verdict)},
            {"B", r.B}};
}

std::string iso_timestamp_now() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json RunManifest::to_json() const {
    return {{"command", command},
            {"config_echo", config_echo},
            {"tool_version", tool_version},
            {"started", started},
            {"finished", finished},
            {"exit_status", exit_status}};
}

json with_manifest(const RunManifest& m, json result) {
    return {{"manifest", m.to_json()}, {"result", std::move(result)}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    out.close();
    if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace ampwick
