#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mstab/charts.hpp"

namespace mstab {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Knobs for the verification pipeline.  Read from a plain key = value file
 * and overridable by flags; flags win. */
struct RunConfig {
    unsigned precision = 8;   // Witt precision k
    int series_degree = 16;   // FGL degree cap D
    std::optional<std::pair<int, int>> ab;  // a comodule structure, or all four
    int pmax = 4;
    char scenario = 'A';
    std::string format = "text";
    std::string out;

    void validate() const;
    /* parse `key = value` lines; '#' starts a comment */
    static RunConfig from_file(const std::string& path);
    void apply_key(const std::string& key, const std::string& value);
};

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

/* the full battery: fgl -> stabilizer -> comodule -> action -> cohomology
 * (both routes) -> charts, in canonical order */
std::vector<CheckResult> run_all(const RunConfig& cfg);

/* named subsets, used by the CLI subcommands */
std::vector<CheckResult> run_fgl_checks(const RunConfig& cfg);
std::vector<CheckResult> run_stabilizer_checks(const RunConfig& cfg);
std::vector<CheckResult> run_comodule_checks(const RunConfig& cfg);
std::vector<CheckResult> run_action_checks(const RunConfig& cfg);
std::vector<CheckResult> run_cohomology_checks(const RunConfig& cfg);
std::vector<CheckResult> run_duality_checks(const RunConfig& cfg);
std::vector<CheckResult> run_chart_checks(const RunConfig& cfg);

/* one JSON object per line: {"check": ..., "status": "pass|fail",
 * "detail": ..., "ms": ...} */
std::string report_json_lines(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mstab
