#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mstab/pipeline.hpp"

using namespace mstab;

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("configuration validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.precision = 2;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.precision = 8;
    cfg.series_degree = 4;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.series_degree = 16;
    cfg.pmax = 7;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.pmax = 4;
    cfg.ab = {2, 0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.ab = {1, 1};
    cfg.scenario = 'C';
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.scenario = 'B';
    cfg.format = "yaml";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.format = "json";
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config file parsing") {
    std::string path = "mstab_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "precision = 12\n";
        out << "a = 1\n";
        out << "b = 0   # trailing comment\n";
        out << "scenario = B\n";
    }
    RunConfig cfg = RunConfig::from_file(path);
    CHECK(cfg.precision == 12);
    REQUIRE(cfg.ab.has_value());
    CHECK(cfg.ab->first == 1);
    CHECK(cfg.ab->second == 0);
    CHECK(cfg.scenario == 'B');
    /* flags win over the file */
    cfg.apply_key("precision", "10");
    CHECK(cfg.precision == 10);
    CHECK_THROWS_AS(cfg.apply_key("nope", "1"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_file("does_not_exist.cfg"), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("the full battery passes and reports deterministically") {
    RunConfig cfg;
    auto r1 = run_all(cfg);
    CHECK(all_passed(r1));
    CHECK(r1.size() >= 25);
    auto r2 = run_all(cfg);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].check == r2[i].check);
        CHECK(r1[i].pass == r2[i].pass);
        CHECK(r1[i].detail == r2[i].detail);
    }
}

TEST_CASE("single-structure runs agree with the full run") {
    RunConfig cfg;
    cfg.ab = {1, 0};
    auto rs = run_all(cfg);
    CHECK(all_passed(rs));
}

TEST_CASE("report lines are one json object per check") {
    RunConfig cfg;
    auto rs = run_fgl_checks(cfg);
    std::string lines = report_json_lines(rs);
    size_t count = 0, pos = 0;
    while ((pos = lines.find('\n', pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == rs.size());
    std::istringstream in(lines);
    std::string line;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("check"));
        CHECK(j.contains("status"));
        CHECK(j.contains("detail"));
        CHECK(j.contains("ms"));
        CHECK((j["status"] == "pass" || j["status"] == "fail"));
    }
}

TEST_SUITE_END();
