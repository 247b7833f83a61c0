#pragma once

#include <array>
#include <string>
#include <vector>

#include "mstab/cohomology.hpp"

namespace mstab {

/* One v2-periodic family, named by its canonical representative.
 * zeta raises s by 1 and lowers the stem by 1; v2 has bidegree (0,6). */
struct ChartClass {
    int s = 0;
    int stem = 0;
    std::string name;
    bool zeta = false;

    friend bool operator==(const ChartClass&, const ChartClass&) = default;
};

struct ChartDifferential {
    int r = 3;
    std::string source;
    std::string target;
    std::string status;  // "possible" | "imposed" | "ruled_out"
    std::string reason;
    /* bigradings of the named representatives, for the invariant checks */
    int src_s = 0, src_stem = 0, tgt_s = 0, tgt_stem = 0;

    friend bool operator==(const ChartDifferential&, const ChartDifferential&) = default;
};

struct ChartExtension {
    std::string source;
    std::string target;
    std::string status;  // "open" | "ruled_out"
    std::string reason;

    friend bool operator==(const ChartExtension&, const ChartExtension&) = default;
};

struct ChartPage {
    std::string page;
    int period = 6;
    std::vector<ChartClass> classes;
    std::vector<ChartDifferential> differentials;
    std::vector<ChartExtension> extensions;

    friend bool operator==(const ChartPage&, const ChartPage&) = default;
};

/* The E2 page of the descent spectral sequence, fed by the verified
 * H^*(S_2^1; E_* Z) table; requires the collapse hypothesis (alpha^-1 pi
 * acting trivially) to have been machine-checked by the caller. */
ChartPage hfpss_e2(const CohomTable& h_s21, bool collapse_verified);

/* The two d3 scenarios: A (collapse, E2 = Einf) and B (the x_{1,4} family
 * supports d3 into v2 zeta x_{3,0}).  The bottom-cell family differential
 * is ruled out in both. */
struct Scenario {
    char label = 'A';
    ChartPage einf;
};
std::vector<Scenario> d3_scenarios(const ChartPage& e2);

/* F2-ranks of the associated graded of pi_* per stem mod 6 */
std::array<int, 6> homotopy_table(const Scenario& sc);

/* the candidate hidden 2-extensions, with the two
 * eliminated families marked */
std::vector<ChartExtension> extension_annotations();

/* rendering */
std::string emit_chart_json(const ChartPage& page);
ChartPage parse_chart_json(const std::string& text);
std::string emit_chart_ascii(const ChartPage& page, int stem_lo = -8, int stem_hi = 10);
std::string emit_chart_svg(const ChartPage& page, int stem_lo = -8, int stem_hi = 10);

}  // namespace mstab
