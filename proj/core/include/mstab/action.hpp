#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mstab/f4mat.hpp"
#include "mstab/o2.hpp"
#include "mstab/poly.hpp"

namespace mstab {

/* basis order of the degree-0 module: x0 x2 x4 x6 y6 y8 y10 y12 (bars) */
inline const std::array<const char*, 8> kEZBasisNames = {
    "x0", "x2", "x4", "x6", "y6", "y8", "y10", "y12"};

/* the action of one stabilizer element on the 8 degree-0 generators,
 * together with its twist t~_0 on u */
struct ActionMatrix {
    Mat mat;     // 8x8 over F4
    F4 u_twist;  // t~_0
};

/* the action of a stabilizer element on the eight degree-0 generators,
 * read off its t~ profile, for module parameters (a,b) */
ActionMatrix action_matrix(const Profile& p, int a, int b);

/* action on the ungraded coordinates x0,x2,x4,x6: entry (coeff, upow, tgt)
 * meaning coeff * u^{upow} * x_tgt */
struct XRow {
    struct Term {
        F4 coeff;
        int upow;
        int tgt;
    };
    std::vector<Term> terms;
};
std::array<XRow, 4> x_coordinate_table(const Profile& p);

/* Q8 = {e, m, i, mi, j, mj, k, mk} acting through its t~ profiles */
inline const std::array<const char*, 8> kQ8Names = {"e",  "m",  "i", "mi",
                                                    "j",  "mj", "k", "mk"};

/* The coaction-derived action makes the degree-0 module a RIGHT module:
 * matrices compose contravariantly, rep(gh) = rep(h) rep(g).  Every
 * statement the action carries (fixed points, regularity, operators built
 * from group-ring elements) is insensitive to the side, since the Q8
 * relation set is inversion-symmetric. */
struct GModuleSpec {
    int a = 0, b = 0;
    std::array<O2, 8> elems;       // group elements in O2
    std::array<int, 64> mul;       // multiplication table, indices into elems
    std::array<ActionMatrix, 8> rep;
};

/* build the Q8 module from a verified embedding; checks the group relations
 * and the homomorphism property of rep on all pairs */
GModuleSpec q8_module(const QuatEmbedding& q, int a, int b);

/* the conjugate module for Q8' = pi Q8 pi^-1 */
GModuleSpec conjugate_q8_module(const QuatEmbedding& q, const O2& pi, int a, int b);

/* a split V4 + V4 module (the c = 0 control case) */
GModuleSpec split_v4v4_module(const QuatEmbedding& q);

/* Regular-representation criterion.  Normalizes the x-block to the reference
 * V4 basis, applies the off-diagonal normalization, reads (a,b,c,d) off the
 * central involution, and certifies the verdict by the 8 translates of the
 * cyclic vector when c != 0. */
struct RegularityVerdict {
    bool regular = false;
    F4 pa, pb, pc, pd;  // normal-form parameters read off the central involution
    F4 det_translates;  // det of the 8-translate matrix, equals pc^4
};
RegularityVerdict regularity_test(const GModuleSpec& spec);

/* det of the symbolic translate matrix over F2[a,b,c,d]; equals c^4 */
Poly regularity_certificate();

/* joint fixed points of a list of action matrices, as reduced-echelon basis
 * vectors in the EZ basis order */
std::vector<std::vector<F4>> fixed_points(const std::vector<Mat>& mats);

/* rep(profile(g1 g2)) = rep(profile(g1)) rep(profile(g2)) for fixed (a,b) */
bool composition_compat(const O2& g1, const O2& g2, int a, int b);

/* The triviality statements: alpha^-1 pi acts as the identity; alpha and
 * -1 restrict to the identity on span{x0..x6}; alpha moves y6. */
struct TrivialityReport {
    bool alpha_inv_pi_identity = false;
    bool alpha_fixes_x_block = false;
    bool minus_one_fixes_x_block = false;
    bool alpha_nontrivial_on_y6 = false;
    bool filtration2_trivial_on_x_block = false;  // sampled F_{2/2} elements
};
TrivialityReport triviality_checks(const QuatEmbedding& q, const AlphaPi& ap, int a, int b);

}  // namespace mstab
