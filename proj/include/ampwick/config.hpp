#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ampwick/amp.hpp"
#include "ampwick/counterexample.hpp"
#include "ampwick/diagnostics.hpp"
#include "ampwick/polynomial.hpp"
#include "ampwick/state_evolution.hpp"

namespace ampwick {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A polynomial is an array of coefficients (numbers or "num/den" strings,
// lowest degree first) or {"coeffs": [...], "scale_sq": "1/2",
// "normalize_variance": true}.
Polynomial polynomial_from_json(const json& j);
json to_json(const Polynomial& p);

// Accepts a list of polynomials or {"F": [...]}.
std::vector<Polynomial> polynomials_from_json(const json& j);
json to_json(const std::vector<Polynomial>& F);

AMPConfig config_from_json(const json& j);
json to_json(const AMPConfig& c);

json read_json_file(const std::string& path);
AMPConfig load_config(const std::string& path);
std::vector<Polynomial> load_polynomials(const std::string& path);

json to_json(const ExperimentReport& r);
std::string report_csv(const ExperimentReport& r);
json to_json(const SEState& s);
json to_json(const TreeDiagnostics& d);
json to_json(const RegimeReport& r);

std::string iso_timestamp_now();

struct RunManifest {
    std::string command;
    json config_echo = json::object();
    std::string tool_version = kToolVersion;
    std::string started;
    std::string finished;
    int exit_status = 0;

    json to_json() const;
};

// Wraps a result as {"manifest": ..., "result": ...}.
json with_manifest(const RunManifest& m, json result);

// Throws std::runtime_error naming the path.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ampwick
