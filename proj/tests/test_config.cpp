#include "doctest.h"

#include <algorithm>

#include "ampwick/config.hpp"
#include "ampwick/verify.hpp"

using namespace ampwick;

TEST_CASE("polynomial JSON forms") {
    CHECK(polynomial_from_json(json::parse(R"([0, 1])")) == Polynomial::identity());
    CHECK(polynomial_from_json(json::parse(R"(["-1", 0, "1"])")) == Polynomial({-1, 0, 1}));
    CHECK(polynomial_from_json(json::parse(R"([0.5, "3/4"])")) == Polynomial({Rational(1, 2), Rational(3, 4)}));
    auto h = polynomial_from_json(json::parse(R"({"coeffs": [-1, 0, 1], "scale_sq": "1/2"})"));
    CHECK(se_step(h, 1) == 1);
    auto n = polynomial_from_json(json::parse(R"({"coeffs": [0, 0, 0, 1], "normalize_variance": true})"));
    CHECK(se_step(n, 1) == 1);
    CHECK(polynomial_from_json(to_json(h)) == h);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"coefs": [1]})")), ConfigError);
    CHECK(polynomials_from_json(json::parse(R"({"F": [[0, 1], [0, 0, 1]]})")).size() == 2);
}

TEST_CASE("config round trip") {
    AMPConfig c = desk_scale_config(12345678901234567ULL, 2);
    c.init.kind = InitSpec::Kind::SubGaussianIID;
    c.init.tau0_sq = Rational(9, 4);
    c.onsager = OnsagerMode::MeanField;
    c.ensemble = Ensemble::UniformScaled;
    c.tol_abs = 0.1;
    c.z = 2.5;
    AMPConfig back = config_from_json(json::parse(to_json(c).dump()));
    CHECK(back == c);
    CHECK(config_from_json(json::parse("{}")) == AMPConfig{});
}

TEST_CASE("malformed configs are rejected") {
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"N": "many"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"trails": 3})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"ensemble": "cauchy"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"F": [[0, 0, 1]]})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse("[1, 2]")), ConfigError);
}

TEST_CASE("report serialization") {
    ExperimentReport r;
    r.entries.push_back({1, 2, 1.01, 0.02, 1.0, 0.01, true});
    r.entries.push_back({1, 4, 2.8, 0.1, 3.0, 0.2, false});
    std::string csv = report_csv(r);
    CHECK(csv.rfind("t,m,empirical,stderr,predicted,abs_error,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    json j = to_json(r);
    CHECK(j["all_pass"] == false);
    CHECK(j["entries"].size() == 2);
    CHECK(config_from_json(j["config"]) == r.config);
}

TEST_CASE("manifest") {
    RunManifest m;
    m.command = "simulate";
    m.config_echo = to_json(AMPConfig{});
    m.started = m.finished = iso_timestamp_now();
    json w = with_manifest(m, {{"x", 1}});
    CHECK(w["manifest"]["tool_version"] == kToolVersion);
    CHECK(config_from_json(w["manifest"]["config_echo"]) == AMPConfig{});
    CHECK(w["manifest"]["started"].get<std::string>().size() == 20);
}

TEST_CASE("IO errors name the path") {
    const std::string bad = "/nonexistent-dir/out.json";
    try {
        write_text_file(bad, "x");
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(load_config("/nonexistent-dir/cfg.json"), doctest::Contains("/nonexistent-dir/cfg.json"),
                         std::runtime_error);
}

TEST_CASE("verify suites partition the criteria") {
    std::vector<int> all;
    for (Suite s : {Suite::Algebra, Suite::Identities, Suite::Oracle, Suite::MonteCarlo}) {
        auto c = suite_criteria(s);
        all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == suite_criteria(Suite::All));
    CHECK(parse_suite("identities") == Suite::Identities);
    CHECK_THROWS(parse_suite("everything"));
}
