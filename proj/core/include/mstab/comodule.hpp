#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mstab/f4.hpp"

namespace mstab {

/* Monomial t1^e1 t2^e2 v2^ev in BP_*BP/(2,v1), |t1| = 2, |t2| = |v2| = 6. */
struct BPMono {
    uint8_t e1 = 0, e2 = 0, ev = 0;

    int degree() const { return 2 * e1 + 6 * e2 + 6 * ev; }
    bool is_one() const { return e1 == 0 && e2 == 0 && ev == 0; }
    auto operator<=>(const BPMono&) const = default;

    friend BPMono operator*(BPMono x, BPMono y) {
        return BPMono{uint8_t(x.e1 + y.e1), uint8_t(x.e2 + y.e2), uint8_t(x.ev + y.ev)};
    }
    static BPMono t1(int p = 1) { return BPMono{uint8_t(p), 0, 0}; }
    static BPMono t2(int p = 1) { return BPMono{0, uint8_t(p), 0}; }
    static BPMono v2(int p = 1) { return BPMono{0, 0, uint8_t(p)}; }

    std::string str() const;
};

/* A coaction table psi(gen_i) = sum (monomial | gen_j) with F2 coefficients,
 * over an ordered generator list with internal degrees. */
struct CoactionTable {
    std::vector<int> degrees;                        // per generator
    std::vector<std::string> names;                  // per generator
    std::vector<std::set<std::pair<BPMono, int>>> psi;

    int ngens() const { return int(degrees.size()); }
    void toggle(int src, BPMono m, int tgt);
    bool degree_homogeneous() const;
    std::string str() const;

    friend bool operator==(const CoactionTable&, const CoactionTable&) = default;
};

/* One of the four comodule structures, indexed by (a,b) in F2 x F2. */
struct ComoduleStructure {
    int a = 0, b = 0;
    CoactionTable table;
};

/* generator layout of the 8-generator module: x0 x2 x4 x6 y6 y8 y10 y12 */
CoactionTable make_z_table();
/* the 4-generator comodule g0 g2 g4 g6 with the x-block coaction */
CoactionTable make_gblock();

/* the reference 8-generator structure for parameters (a,b) */
ComoduleStructure reference_comodule(int a, int b);

/* counitality: the epsilon-collapse of every row is 1|row generator */
bool check_counit(const CoactionTable& t);

/* coassociativity (Delta ox id) psi = (id ox psi) psi, expanded exactly;
 * returns the first failing generator index, or nullopt if it holds.
 * Uses Delta(t1) = t1|1 + 1|t1, Delta(t2) = t2|1 + t1|t1^2 + 1|t2 and
 * eta_R(v2) = v2, all mod (2, v1). */
std::optional<int> check_coassoc(const CoactionTable& t);

/* Solve the degree-constrained ansatz: counitality, the normalizing basis
 * changes, then coassociativity on y8, y10, y12 as an F2-linear system.
 * Returns the four structures plus the solved relations, in elimination
 * order, as strings. */
struct ComoduleFamily {
    std::vector<ComoduleStructure> structures;  // (a,b) = (0,0),(0,1),(1,0),(1,1)
    std::vector<std::string> relations;
};
ComoduleFamily solve_comodule_family();

/* reduction modulo (v2, t1^4, t2^2); independent of (a,b) */
CoactionTable reduce_mod_small(const ComoduleStructure& s);
CoactionTable reduced_reference_table();

/* Monomial xi1^a xi2^b in A(2)_* = F2[xi1,xi2]/(xi1^8, xi2^4). */
struct XiMono {
    uint8_t a = 0, b = 0;
    auto operator<=>(const XiMono&) const = default;
    std::string str() const;
};
using XiTable = std::vector<std::set<std::pair<XiMono, int>>>;

/* t1 -> zeta1^2 = xi1^2, t2 -> zeta2^2 = xi2^2 + xi1^6, v2 -> 0,
 * truncated by xi1^8 = xi2^4 = 0, compared against the homology coaction
 * table under the generator naming x_i -> xi1^{i}g, y_i -> xi1^{i-6}xi2^2 g. */
bool steenrod_double_check(const CoactionTable& t);
XiTable homology_coaction_table();

/* iota(g_i) = x_i and tau(x_i) = 0, tau(y_i) = g_{i-6} (suspended) are
 * comodule maps for this structure */
bool exact_sequence_check(const ComoduleStructure& s);

/* Every single-coefficient flip of a degree-allowed term breaks counit or
 * coassociativity.  Returns the number of candidate flips tested, or -1 if
 * some flip survives. */
int perturbation_robustness(const ComoduleStructure& s);

}  // namespace mstab
