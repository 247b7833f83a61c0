#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mstab/action.hpp"
#include "mstab/f4mat.hpp"

namespace mstab {

/* A finite group as a multiplication table. */
struct FiniteGroup {
    int n = 0;
    int e = 0;
    std::vector<int> mul;  // n x n
    std::vector<int> inv;
    std::vector<std::string> names;

    int prod(int x, int y) const { return mul[size_t(x) * n + y]; }

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int m);
    static FiniteGroup klein4();
    /* from a multiplication table directly */
    static FiniteGroup from_table(int n, std::vector<int> mul, std::vector<std::string> names);
    /* the subgroup spanned by the given element indices (must be closed) */
    FiniteGroup subgroup(const std::vector<int>& elements,
                         std::vector<int>* embed = nullptr) const;
};

/* A left F4[G]-module: mats is a homomorphism into GL(dim, F4). */
struct FGModule {
    const FiniteGroup* G = nullptr;
    int dim = 0;
    std::vector<Mat> mats;  // per group element

    void validate() const;
    static FGModule trivial(const FiniteGroup& G, int dim = 1);
    static FGModule regular(const FiniteGroup& G);
};

/* E0Z as a left module over the abstract Q8 of a GModuleSpec (the
 * coaction-derived matrices form a right action, so g acts by rep(g)^-1) */
struct Q8Package {
    FiniteGroup group;
    FGModule module;  // E0Z, dim 8
};
Q8Package q8_package(const GModuleSpec& spec);

/* Cohomology dims H^p(G;M) for 0 <= p <= p_max, |G| <= 8, computed from a
 * minimal free resolution over F4[G] (G a 2-group; the algebra is local).
 * Exact ranks of small matrices; equivalent to the cobar computation, which
 * cobar_dims provides as an independent brute-force oracle. */
std::vector<int> cohomology_dims(const FGModule& M, int p_max);

/* the normalized inhomogeneous cobar complex, exact ranks; intended for
 * small instances (throws if a cochain group would exceed max_dim) */
std::vector<int> cobar_dims(const FGModule& M, int p_max, int max_dim = 30000);
/* the cobar ranks themselves, for the Euler-characteristic property */
std::vector<int> cobar_ranks(const FGModule& M, int p_max, int max_dim = 30000);

/* basis of M^G */
std::vector<std::vector<F4>> invariants(const FGModule& M);

/* Ind_H^G M = F4[G] (x)_{F4[H]} M for H the subgroup carved out by embed */
FGModule induce(const FiniteGroup& G, const std::vector<int>& embed, const FGModule& MH);

/* Shapiro: H^n(G; Ind_H^G M) = H^n(H; M) for 0 <= n <= p_max */
bool shapiro_check(const FiniteGroup& G, const std::vector<int>& embed, const FGModule& MH,
                   int p_max = 3);

/* a pseudorandom H-submodule of F4[H]^2, for randomized Shapiro runs */
FGModule random_submodule(const FiniteGroup& H, std::mt19937_64& rng);

/* dimension tables indexed by (p, internal degree mod 6) */
struct CohomTable {
    std::map<std::pair<int, int>, int> dims;

    int dim(int p, int t_mod_6) const {
        auto it = dims.find({p, ((t_mod_6 % 6) + 6) % 6});
        return it == dims.end() ? 0 : it->second;
    }
    void set(int p, int t_mod_6, int d) {
        if (d != 0)
            dims[{p, ((t_mod_6 % 6) + 6) % 6}] = d;
    }
    friend bool operator==(const CohomTable&, const CohomTable&) = default;
    std::string str() const;
};

/* H^p(G24; E_* Z): C3-invariants of the Q8-fixed line, with the omega
 * twist on u.  Concentration of H^*(Q8; E0Z) in p = 0 is verified. */
CohomTable g24_cohomology(const GModuleSpec& spec, const O2& omega);

/* H^q(C6; E_* Z) via the Sylow C2 and C3-invariants */
CohomTable c6_cohomology(const GModuleSpec& spec, const O2& omega);

/* H^*(K^1; F2) = F2[y0,y1,y2]/(y0^2, y1^2+y0y1, y2^2+y0y2) with the C3
 * action w.y0 = y0, w.y1 = y1+y2, w.y2 = y1. */
struct K1Ring {
    /* basis monomials per cohomological degree 0..3 (bitmask on y0,y1,y2) */
    std::vector<std::vector<uint8_t>> basis;
    std::vector<Mat> omega_action;  // per degree, over F4

    static K1Ring build();  // verifies dims (1,3,3,1) and the ring relations
};

/* H^s(S_2^1; E_* Z)^{C3} via the K^1 route */
CohomTable s12_via_k1();

/* duality resolution: E1 page and the d1 structure */
struct DualityE1 {
    CohomTable table;  // (p, deg) -> rank, q = 0 rows only
};
DualityE1 duality_e1(const GModuleSpec& spec, const GModuleSpec& conj_spec, const O2& omega,
                     const O2& pi);

struct DualityD1Report {
    bool d1_00_zero = false;       // (1 - alpha) kills the p=0 class
    bool d1_23_zero = false;       // pi(e+i+j+k)(e-alpha^-1)pi^-1 kills p=2
    int sampled_pairs = 0;         // (1-g)(1-h) operators tested
    bool pairs_kill_x024 = false;
    bool pairs_formula_on_x6 = false;  // coefficient t1(h)t1(g)^2 + t1(h)^2 t1(g)
    bool lambda_nonzero = false;   // forced by the K^1-route H^1 rank
};
DualityD1Report duality_d1(const QuatEmbedding& q, const AlphaPi& ap, int a, int b,
                           int n_samples = 60);

/* E2 = E_infinity of the duality spectral sequence; cross-checked against
 * the K^1 route by the caller */
CohomTable duality_e2(const DualityE1& e1, const DualityD1Report& d1);

}  // namespace mstab
