#include "mstab/action.hpp"

#include <algorithm>

namespace mstab {

/**** F4 linear algebra ****/

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pr, j), m.at(r, j));
        F4 inv = m.at(r, c).inv();
        for (int j = 0; j < m.cols; ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            F4 f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) += f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return int(rref(m).size()); }

F4 det(Mat m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("det: non-square matrix");
    F4 d = F4::one();
    for (int c = 0; c < m.cols; ++c) {
        int pr = -1;
        for (int i = c; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0)
            return F4::zero();
        if (pr != c)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pr, j), m.at(c, j));  // char 2: no sign
        d *= m.at(c, c);
        F4 inv = m.at(c, c).inv();
        for (int i = c + 1; i < m.rows; ++i) {
            F4 f = m.at(i, c) * inv;
            if (f.is_zero())
                continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) += f * m.at(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("inverse: non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Mat::identity(n));
    auto piv = rref(aug);
    if (int(piv.size()) != n || piv[size_t(n) - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    return aug.block(0, n, n, n);
}

std::vector<std::vector<F4>> kernel_basis(Mat m) {
    int n = m.cols;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : pivots)
        is_pivot[size_t(c)] = true;
    std::vector<std::vector<F4>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[size_t(c)])
            continue;
        std::vector<F4> v(static_cast<size_t>(n));
        v[size_t(c)] = F4::one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[size_t(pivots[r])] = m.at(int(r), c);  // char 2: -x = x
        basis.push_back(std::move(v));
    }
    return basis;
}

/**** the action table ****/

ActionMatrix action_matrix(const Profile& p, int a, int b) {
    if (p.t0.is_zero())
        throw std::domain_error("action_matrix: profile with t~_0 = 0");
    F4 t0 = p.t0, t1 = p.t1, t2 = p.t2;
    F4 fa = a ? F4::one() : F4::zero();
    F4 fb = b ? F4::one() : F4::zero();
    F4 t0_2 = t0 * t0;
    Mat m(8, 8);
    auto set = [&](int row, int col, F4 v) { m.at(row, col) += v; };

    set(0, 0, F4::one());                       // x0 fixed

    set(0, 1, t0_2 * t1);                       // x2
    set(1, 1, t0);

    set(0, 2, t0 * t1 * t1);                    // x4
    set(2, 2, t0_2);

    set(0, 3, t1 * t1 * t1);                    // x6
    set(1, 3, t0_2 * t1 * t1);
    set(2, 3, t0 * t1);
    set(3, 3, F4::one());

    set(0, 4, t1 * t1 * t1 + t0_2 * t2);        // y6
    set(1, 4, t0_2 * t1 * t1);
    set(4, 4, F4::one());

    set(0, 5, fa * t0_2 * t1 + t0 * t1 * t2);   // y8
    set(1, 5, t2);
    set(2, 5, t1 * t1);
    set(4, 5, t0_2 * t1);
    set(5, 5, t0);

    set(0, 6, t0 * t1 * t1 + t1 * t1 * t2);     // y10
    set(1, 6, t1);
    set(2, 6, t0_2 * t1 * t1 * t1 + t0 * t2);
    set(3, 6, t0 * t1 * t1);
    set(4, 6, t0 * t1 * t1);  // t0 t1^2, as forced by the quotient block
    set(6, 6, t0_2);

    set(0, 7, (fb + F4::one()) * t1 * t1 * t1 + t0_2 * t1 * t1 * t1 * t2 +
                  (fa + fb) * t0 * t2 * t2);    // y12
    set(1, 7, t0 * t1 * t1 * t2);
    set(2, 7, fb * t0 * t1 + t1 * t2);
    set(3, 7, t0_2 * t2);
    set(4, 7, t1 * t1 * t1);
    set(5, 7, t0_2 * t1 * t1);
    set(6, 7, t0 * t1);
    set(7, 7, F4::one());
    return ActionMatrix{std::move(m), t0};
}

std::array<XRow, 4> x_coordinate_table(const Profile& p) {
    F4 t0 = p.t0, t1 = p.t1;
    F4 t0_2 = t0 * t0;
    std::array<XRow, 4> rows;
    auto add = [&](int src, F4 c, int up, int tgt) {
        if (!c.is_zero())
            rows[size_t(src)].terms.push_back({c, up, tgt});
    };
    add(0, F4::one(), 0, 0);
    add(1, t0 * t1, -1, 0);
    add(1, F4::one(), 0, 1);
    add(2, t0_2 * t1 * t1, -2, 0);
    add(2, F4::one(), 0, 2);
    add(3, t1 * t1 * t1, -3, 0);
    add(3, t0_2 * t1 * t1, -2, 1);
    add(3, t0 * t1, -1, 2);
    add(3, F4::one(), 0, 3);
    return rows;
}

/**** Q8 modules ****/

static GModuleSpec build_module(const std::array<O2, 8>& elems, int a, int b) {
    GModuleSpec spec;
    spec.a = a;
    spec.b = b;
    spec.elems = elems;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            O2 prod = elems[size_t(i)] * elems[size_t(j)];
            int idx = -1;
            for (int t = 0; t < 8; ++t)
                if (elems[size_t(t)] == prod)
                    idx = t;
            if (idx < 0)
                throw std::runtime_error("q8_module: product left the element set");
            spec.mul[size_t(i) * 8 + j] = idx;
        }
    for (int i = 0; i < 8; ++i) {
        spec.rep[size_t(i)] = action_matrix(ttilde_profile(elems[size_t(i)]), a, b);
        if (spec.rep[size_t(i)].u_twist != F4::one())
            throw std::runtime_error("q8_module: t~_0 != 1 on a Q8 element");
    }
    /* the coaction-derived matrices compose contravariantly (a right
     * module): rep(gh) = rep(h) rep(g), across the whole table */
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const Mat& lhs = spec.rep[size_t(spec.mul[size_t(i) * 8 + j])].mat;
            if (lhs != spec.rep[size_t(j)].mat * spec.rep[size_t(i)].mat)
                throw std::runtime_error("q8_module: rep is not an anti-homomorphism");
        }
    return spec;
}

GModuleSpec q8_module(const QuatEmbedding& q, int a, int b) {
    unsigned k = q.i.prec();
    std::array<O2, 8> elems = {O2::one(k), q.minus_one, q.i, -q.i,
                               q.j,        -q.j,        q.k, -q.k};
    return build_module(elems, a, b);
}

GModuleSpec conjugate_q8_module(const QuatEmbedding& q, const O2& pi, int a, int b) {
    unsigned k = q.i.prec();
    auto c = [&pi](const O2& g) { return g.conj_by(pi); };
    std::array<O2, 8> elems = {O2::one(k), c(q.minus_one), c(q.i), c(-q.i),
                               c(q.j),     c(-q.j),        c(q.k), c(-q.k)};
    return build_module(elems, a, b);
}

GModuleSpec split_v4v4_module(const QuatEmbedding& q) {
    /* block-diagonal sum of two copies of the V4 block: M = 0, so c = 0 */
    GModuleSpec spec = q8_module(q, 0, 0);
    for (auto& am : spec.rep) {
        Mat blockdiag(8, 8);
        blockdiag.set_block(0, 0, am.mat.block(0, 0, 4, 4));
        blockdiag.set_block(4, 4, am.mat.block(4, 4, 4, 4));
        am.mat = std::move(blockdiag);
    }
    /* the diagonal blocks of the y-side equal the x-side V4 action, so the
     * homomorphism property survives blockwise */
    return spec;
}

/**** regularity ****/

static Mat v4_normalizing_matrix() {
    const F4 o = F4::zero(), l = F4::one(), w = F4::w(), w2 = F4::w2();
    Mat q(4, 4);
    F4 vals[16] = {l, o, o, l,
                   o, l, l, l,
                   o, w, w2, l,
                   o, o, o, l};
    std::copy(vals, vals + 16, q.a.begin());
    return q;
}

static Mat v4_ref_i() {
    Mat m(4, 4);
    const F4 l = F4::one();
    m.at(0, 0) = l; m.at(0, 1) = l;
    m.at(1, 1) = l;
    m.at(2, 2) = l; m.at(2, 3) = l;
    m.at(3, 3) = l;
    return m;
}
static Mat v4_ref_j() {
    Mat m(4, 4);
    const F4 l = F4::one();
    m.at(0, 0) = l; m.at(0, 2) = l;
    m.at(1, 1) = l; m.at(1, 3) = l;
    m.at(2, 2) = l;
    m.at(3, 3) = l;
    return m;
}

RegularityVerdict regularity_test(const GModuleSpec& spec) {
    /* move the V4 blocks into the reference basis */
    Mat q4 = v4_normalizing_matrix();
    Mat q4i = inverse(q4);
    Mat Q(8, 8), Qi(8, 8);
    Q.set_block(0, 0, q4);
    Q.set_block(4, 4, q4);
    Qi.set_block(0, 0, q4i);
    Qi.set_block(4, 4, q4i);

    auto conj = [&](const Mat& m) { return Q * m * Qi; };
    Mat ri = conj(spec.rep[2].mat);
    Mat rj = conj(spec.rep[4].mat);

    Mat zero44(4, 4);
    if (ri.block(4, 0, 4, 4) != zero44 || rj.block(4, 0, 4, 4) != zero44)
        throw std::domain_error("regularity_test: representation is not block upper-triangular");
    if (ri.block(0, 0, 4, 4) != v4_ref_i() || ri.block(4, 4, 4, 4) != v4_ref_i() ||
        rj.block(0, 0, 4, 4) != v4_ref_j() || rj.block(4, 4, 4, 4) != v4_ref_j())
        throw std::domain_error("regularity_test: x-block not in normalized V4 form");

    Mat X = ri.block(0, 4, 4, 4);
    Mat Y = rj.block(0, 4, 4, 4);

    /* the off-diagonal normalization killing rows 1 and 3 of X and Y */
    Mat pbar(4, 4);
    pbar.at(0, 0) = Y.at(0, 2);
    pbar.at(0, 2) = X.at(0, 3);
    pbar.at(1, 0) = X.at(0, 0);
    pbar.at(1, 1) = X.at(0, 1) + Y.at(0, 2);
    pbar.at(1, 2) = X.at(0, 2);
    pbar.at(2, 0) = Y.at(0, 0);
    pbar.at(2, 1) = Y.at(0, 1);
    pbar.at(2, 3) = Y.at(0, 3);
    pbar.at(3, 0) = X.at(2, 0);
    pbar.at(3, 1) = X.at(2, 1) + Y.at(0, 0);
    pbar.at(3, 2) = X.at(2, 2);
    pbar.at(3, 3) = X.at(2, 3);
    Mat P = Mat::identity(8);
    P.set_block(0, 4, pbar);  // P = P^-1 in char 2

    std::array<Mat, 8> reps;
    for (int g = 0; g < 8; ++g)
        reps[size_t(g)] = P * conj(spec.rep[size_t(g)].mat) * P;

    Mat Xn = reps[2].block(0, 4, 4, 4);
    Mat Yn = reps[4].block(0, 4, 4, 4);
    for (int j = 0; j < 4; ++j)
        if (!Xn.at(0, j).is_zero() || !Xn.at(2, j).is_zero() || !Yn.at(0, j).is_zero())
            throw std::runtime_error("regularity_test: normalization failed to clear rows");

    Mat M = reps[1].block(0, 4, 4, 4);  // the central involution
    RegularityVerdict v;
    v.pc = M.at(0, 0);
    v.pd = M.at(0, 1);
    v.pa = M.at(0, 2);
    v.pb = M.at(0, 3);
    Mat mref(4, 4);
    mref.at(0, 0) = v.pc; mref.at(0, 1) = v.pd; mref.at(0, 2) = v.pa; mref.at(0, 3) = v.pb;
    mref.at(1, 1) = v.pc; mref.at(1, 3) = v.pa;
    mref.at(2, 2) = v.pc; mref.at(2, 3) = v.pd;
    mref.at(3, 3) = v.pc;
    if (M != mref)
        throw std::runtime_error("regularity_test: central involution block has the wrong shape");

    /* certify with the translates of the cyclic vector c4' = e_8 */
    Mat A(8, 8);
    for (int g = 0; g < 8; ++g) {
        auto col = reps[size_t(g)].col(7);
        for (int i = 0; i < 8; ++i)
            A.at(i, g) = col[size_t(i)];
    }
    v.det_translates = det(A);
    if (v.det_translates != v.pc * v.pc * v.pc * v.pc)
        throw std::runtime_error("regularity_test: det of translates != c^4");
    v.regular = !v.pc.is_zero();
    return v;
}

/**** the symbolic certificate ****/

namespace {



Poly pc(const std::vector<std::string>& vars, int c) {
    return Poly::constant(c ? F4::one() : F4::zero(), vars);
}

PolyMat pmul(const PolyMat& x, const PolyMat& y) {
    PolyMat r(x.n, x.a[0].vars());
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Poly acc(x.a[0].vars());
            for (int k = 0; k < x.n; ++k)
                acc += x.at(i, k) * y.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

}  // namespace

Poly regularity_certificate() {
    const std::vector<std::string> vars = {"a", "b", "c", "d"};
    auto V = [&](const char* n) { return Poly::variable(n, vars); };
    Poly a = V("a"), b = V("b"), c = V("c"), d = V("d");
    Poly z = pc(vars, 0), one = pc(vars, 1);

    auto fill = [&](std::initializer_list<Poly> entries) {
        PolyMat m(4, vars);
        int i = 0;
        for (const auto& p : entries)
            m.a[size_t(i++)] = p;
        return m;
    };
    PolyMat X = fill({z, z, z, z,
                      c, d, a, b,
                      z, z, z, z,
                      z, z, c, d});
    PolyMat Y = fill({z, z, z, z,
                      c, c + d, a + c, a + b + c + d,
                      c, d, a, b,
                      z, c, c, a + c + d});
    PolyMat M = fill({c, d, a, b,
                      z, c, z, a,
                      z, z, c, d,
                      z, z, z, c});
    PolyMat B4i = fill({one, one, z, z,
                        z, one, z, z,
                        z, z, one, one,
                        z, z, z, one});
    PolyMat B4j = fill({one, z, one, z,
                        z, one, z, one,
                        z, z, one, z,
                        z, z, z, one});

    auto big = [&](const PolyMat& diag, const PolyMat& tr) {
        PolyMat m(8, vars);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                m.at(i, j) = diag.at(i, j);
                m.at(i + 4, j + 4) = diag.at(i, j);
                m.at(i, j + 4) = tr.at(i, j);
            }
        return m;
    };
    PolyMat I4 = fill({one, z, z, z, z, one, z, z, z, z, one, z, z, z, z, one});
    PolyMat gi = big(B4i, X);
    PolyMat gj = big(B4j, Y);
    PolyMat gm = big(I4, M);

    /* the group relations must hold identically in a,b,c,d */
    PolyMat ii = pmul(gi, gi), jj = pmul(gj, gj);
    PolyMat ij = pmul(gi, gj), mji = pmul(gm, pmul(gj, gi));
    for (int t = 0; t < 64; ++t) {
        if (ii.a[size_t(t)] != gm.a[size_t(t)] || jj.a[size_t(t)] != gm.a[size_t(t)])
            throw std::runtime_error("regularity_certificate: i^2 = j^2 = -1 fails symbolically");
        if (ij.a[size_t(t)] != mji.a[size_t(t)])
            throw std::runtime_error("regularity_certificate: ij = (-1)ji fails symbolically");
    }

    PolyMat gk = pmul(gi, gj);
    PolyMat translates[8] = {PolyMat(8, vars), gm, gi, pmul(gm, gi),
                             gj, pmul(gm, gj), gk, pmul(gm, gk)};
    for (int i = 0; i < 8; ++i)
        translates[0].at(i, i) = one;  // the identity element

    PolyMat A(8, vars);
    for (int g = 0; g < 8; ++g)
        for (int i = 0; i < 8; ++i)
            A.at(i, g) = translates[g].at(i, 7);  // image of the cyclic vector e_8
    return poly_det(A);
}

/**** fixed points and triviality ****/

std::vector<std::vector<F4>> fixed_points(const std::vector<Mat>& mats) {
    if (mats.empty())
        return kernel_basis(Mat(0, 8));
    int n = mats[0].cols;
    Mat stacked(int(mats.size()) * n, n);
    for (size_t t = 0; t < mats.size(); ++t) {
        Mat diff = mats[t] + Mat::identity(n);  // char 2: R - I
        stacked.set_block(int(t) * n, 0, diff);
    }
    return kernel_basis(std::move(stacked));
}

bool composition_compat(const O2& g1, const O2& g2, int a, int b) {
    /* right-module convention: the matrix of a product is the reversed
     * product of the matrices */
    Mat lhs = action_matrix(ttilde_profile(g1 * g2), a, b).mat;
    Mat rhs = action_matrix(ttilde_profile(g2), a, b).mat *
              action_matrix(ttilde_profile(g1), a, b).mat;
    return lhs == rhs;
}

TrivialityReport triviality_checks(const QuatEmbedding& q, const AlphaPi& ap, int a, int b) {
    TrivialityReport r;
    Mat id8 = Mat::identity(8);

    O2 res = ap.alpha.inv() * ap.pi;
    ActionMatrix am_res = action_matrix(ttilde_profile(res), a, b);
    r.alpha_inv_pi_identity = (am_res.mat == id8 && am_res.u_twist == F4::one());

    auto x_block_is_identity = [&](const Mat& m) {
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 8; ++i) {
                F4 want = (i == j) ? F4::one() : F4::zero();
                if (m.at(i, j) != want)
                    return false;
            }
        return true;
    };
    Mat ralpha = action_matrix(ttilde_profile(ap.alpha), a, b).mat;
    Mat rminus = action_matrix(ttilde_profile(q.minus_one), a, b).mat;
    r.alpha_fixes_x_block = x_block_is_identity(ralpha);
    r.minus_one_fixes_x_block = x_block_is_identity(rminus);

    /* alpha y6 = w x0 + y6 */
    r.alpha_nontrivial_on_y6 =
        (ralpha.at(0, 4) == F4::w()) && (ralpha.at(4, 4) == F4::one());

    std::mt19937_64 rng(0xF22F);
    r.filtration2_trivial_on_x_block = true;
    for (int t = 0; t < 24; ++t) {
        O2 g = random_norm_one(rng, q.i.prec(), 2);
        Mat rg = action_matrix(ttilde_profile(g), a, b).mat;
        if (!x_block_is_identity(rg))
            r.filtration2_trivial_on_x_block = false;
    }
    return r;
}

}  // namespace mstab
