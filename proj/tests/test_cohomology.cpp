#include <doctest.h>

#include <random>

#include "mstab/cohomology.hpp"

using namespace mstab;

TEST_SUITE_BEGIN("cohomology");

static QuatEmbedding& emb() {
    static QuatEmbedding q = find_quaternion_embedding(8);
    return q;
}
static AlphaPi& alphapi() {
    static AlphaPi ap = construct_alpha_pi(8);
    return ap;
}

TEST_CASE("resolution engine agrees with the cobar oracle") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    FiniteGroup v4 = FiniteGroup::klein4();
    std::mt19937_64 rng(21);

    auto agree = [](const FGModule& m, int pmax) {
        return cohomology_dims(m, pmax) == cobar_dims(m, pmax);
    };
    CHECK(agree(FGModule::trivial(c2), 3));
    CHECK(agree(FGModule::regular(c2), 3));
    CHECK(agree(FGModule::trivial(c4), 3));
    CHECK(agree(FGModule::regular(c4), 3));
    CHECK(agree(FGModule::trivial(v4), 3));
    CHECK(agree(FGModule::regular(v4), 3));
    for (int t = 0; t < 6; ++t)
        CHECK(agree(random_submodule(v4, rng), 2));
    /* Q8 coefficients in E0Z, p <= 2 (the largest tractable cobar) */
    auto pkg = q8_package(q8_module(emb(), 1, 0));
    CHECK(cohomology_dims(pkg.module, 2) == cobar_dims(pkg.module, 2));
}

TEST_CASE("periodic cohomology of C2 with trivial coefficients") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    CHECK(cobar_dims(FGModule::trivial(c2), 3) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("free modules are acyclic with a fixed line") {
    auto pkg = q8_package(q8_module(emb(), 0, 0));
    FGModule reg = FGModule::regular(pkg.group);
    CHECK(cohomology_dims(reg, 4) == std::vector<int>{1, 0, 0, 0, 0});
    /* induced from the trivial subgroup: F4[G] (x) W */
    std::mt19937_64 rng(31);
    FiniteGroup triv = pkg.group.subgroup({0});
    for (int t = 0; t < 4; ++t) {
        int d = 1 + int(rng() % 3);
        FGModule W = FGModule::trivial(triv, d);
        FGModule ind = induce(pkg.group, {0}, W);
        auto dims = cohomology_dims(ind, 4);
        CHECK(dims[0] == d);
        for (int p = 1; p <= 4; ++p)
            CHECK(dims[size_t(p)] == 0);
    }
}

TEST_CASE("the trivial Q8 module has the classical Betti numbers") {
    auto pkg = q8_package(q8_module(emb(), 0, 0));
    CHECK(cohomology_dims(FGModule::trivial(pkg.group), 4) ==
          std::vector<int>{1, 2, 2, 1, 1});
}

TEST_CASE("E0Z is cohomologically a line for every structure") {
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            auto pkg = q8_package(q8_module(emb(), a, b));
            CHECK(cohomology_dims(pkg.module, 4) == std::vector<int>{1, 0, 0, 0, 0});
            auto inv = invariants(pkg.module);
            REQUIRE(inv.size() == 1);
            CHECK(inv[0][0] == F4::one());  // the x0 line
        }
}

TEST_CASE("H^0 equals the invariants for arbitrary modules") {
    std::mt19937_64 rng(41);
    FiniteGroup v4 = FiniteGroup::klein4();
    for (int t = 0; t < 8; ++t) {
        FGModule m = random_submodule(v4, rng);
        CHECK(cohomology_dims(m, 0)[0] == int(invariants(m).size()));
    }
}

TEST_CASE("euler characteristic telescopes through the cobar ranks") {
    FiniteGroup v4 = FiniteGroup::klein4();
    std::mt19937_64 rng(51);
    for (int t = 0; t < 4; ++t) {
        FGModule m = random_submodule(v4, rng);
        auto rks = cobar_ranks(m, 3);
        auto dims = cobar_dims(m, 3);
        long cp = m.dim;
        int alt_c = 0, alt_h = 0, sign = 1;
        for (int p = 0; p <= 3; ++p) {
            alt_c += sign * int(cp);
            alt_h += sign * dims[size_t(p)];
            cp *= (v4.n - 1);
            sign = -sign;
        }
        /* sum (-1)^p dim C^p = sum (-1)^p dim H^p + (-1)^3 rank d^3 */
        CHECK(alt_c == alt_h - rks[3]);
    }
}

TEST_CASE("shapiro for reference subgroups") {
    auto pkg = q8_package(q8_module(emb(), 0, 1));
    /* G = H: induction is the identity */
    std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<int> emb_all;
    FiniteGroup whole = pkg.group.subgroup(all, &emb_all);
    FGModule triv8 = FGModule::trivial(whole);
    CHECK(shapiro_check(pkg.group, emb_all, triv8, 3));
    /* the center C2 inside Q8, trivial coefficients: yields H^*(C2) */
    std::vector<int> embc;
    FiniteGroup c2 = pkg.group.subgroup({0, 1}, &embc);
    FGModule trivc = FGModule::trivial(c2);
    FGModule ind = induce(pkg.group, embc, trivc);
    CHECK(cohomology_dims(ind, 3) == std::vector<int>{1, 1, 1, 1});
    CHECK(shapiro_check(pkg.group, embc, trivc, 3));
    /* C2 inside the Klein four group */
    FiniteGroup v4 = FiniteGroup::klein4();
    std::vector<int> embd;
    FiniteGroup d2 = v4.subgroup({0, 1}, &embd);
    CHECK(shapiro_check(v4, embd, FGModule::trivial(d2), 3));
}

TEST_CASE("shapiro on randomized submodules") {
    auto pkg = q8_package(q8_module(emb(), 0, 0));
    std::mt19937_64 rng(61);
    std::vector<std::vector<int>> subs = {{0}, {0, 1}, {0, 1, 2, 3}, {0, 1, 4, 5},
                                          {0, 1, 6, 7}};
    int n = 0;
    for (const auto& s : subs) {
        std::vector<int> e;
        FiniteGroup H = pkg.group.subgroup(s, &e);
        for (int t = 0; t < 4; ++t) {
            CHECK(shapiro_check(pkg.group, e, random_submodule(H, rng), 3));
            ++n;
        }
    }
    CHECK(n == 20);
}

TEST_CASE("G24 invariants form the u^{+-3} line") {
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            CohomTable t = g24_cohomology(q8_module(emb(), a, b), emb().omega);
            CHECK(t.dim(0, 0) == 1);
            CHECK(t.dim(0, 2) == 0);
            CHECK(t.dim(0, 4) == 0);
            for (int p = 1; p <= 4; ++p)
                for (int d = 0; d < 6; d += 2)
                    CHECK(t.dim(p, d) == 0);
        }
}

TEST_CASE("C6 cohomology is rank four per period in q = 0") {
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            CohomTable t = c6_cohomology(q8_module(emb(), a, b), emb().omega);
            CHECK(t.dim(0, 0) == 2);
            CHECK(t.dim(0, 2) == 1);
            CHECK(t.dim(0, 4) == 1);
            int total = 0;
            for (const auto& [key, d] : t.dims) {
                CHECK(key.first == 0);
                total += d;
            }
            CHECK(total == 4);
        }
}

TEST_CASE("the K1 ring and its action") {
    K1Ring ring = K1Ring::build();
    CHECK(ring.basis[0].size() == 1);
    CHECK(ring.basis[1].size() == 3);
    CHECK(ring.basis[2].size() == 3);
    CHECK(ring.basis[3].size() == 1);
    /* y0 y1 y2 is fixed by omega */
    CHECK(ring.omega_action[3] == Mat::identity(1));
    CohomTable t = s12_via_k1();
    CHECK(t.dim(0, 0) == 1);
    CHECK(t.dim(1, 0) == 1);
    CHECK(t.dim(1, 2) == 1);
    CHECK(t.dim(1, 4) == 1);
    CHECK(t.dim(2, 0) == 1);
    CHECK(t.dim(2, 2) == 1);
    CHECK(t.dim(2, 4) == 1);
    CHECK(t.dim(3, 0) == 1);
    int total = 0;
    for (const auto& [key, d] : t.dims) {
        CHECK(key.first <= 3);  // nothing above s = 3
        total += d;
    }
    CHECK(total == 8);
}

TEST_CASE("duality resolution") {
    int a = 1, b = 1;
    GModuleSpec spec = q8_module(emb(), a, b);
    GModuleSpec conj = conjugate_q8_module(emb(), alphapi().pi, a, b);
    DualityE1 e1 = duality_e1(spec, conj, emb().omega, alphapi().pi);
    CHECK(e1.table.dim(0, 0) == 1);
    CHECK(e1.table.dim(1, 0) == 2);
    CHECK(e1.table.dim(1, 2) == 1);
    CHECK(e1.table.dim(1, 4) == 1);
    CHECK(e1.table.dim(2, 0) == 2);
    CHECK(e1.table.dim(3, 0) == 1);

    DualityD1Report d1 = duality_d1(emb(), alphapi(), a, b, 60);
    CHECK(d1.d1_00_zero);
    CHECK(d1.d1_23_zero);
    CHECK(d1.sampled_pairs >= 50);
    CHECK(d1.pairs_kill_x024);
    CHECK(d1.pairs_formula_on_x6);
    CHECK(d1.lambda_nonzero);

    CohomTable e2 = duality_e2(e1, d1);
    CHECK(e2 == s12_via_k1());
    /* ranks (1,3,3,1) */
    int per_s[4] = {0, 0, 0, 0};
    for (const auto& [key, d] : e2.dims)
        per_s[key.first] += d;
    CHECK(per_s[0] == 1);
    CHECK(per_s[1] == 3);
    CHECK(per_s[2] == 3);
    CHECK(per_s[3] == 1);
}

TEST_CASE("two-route agreement holds for every structure") {
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            GModuleSpec spec = q8_module(emb(), a, b);
            GModuleSpec conj = conjugate_q8_module(emb(), alphapi().pi, a, b);
            DualityE1 e1 = duality_e1(spec, conj, emb().omega, alphapi().pi);
            DualityD1Report d1 = duality_d1(emb(), alphapi(), a, b, 50);
            CHECK(duality_e2(e1, d1) == s12_via_k1());
        }
}

TEST_CASE("oversized groups are rejected") {
    FiniteGroup c6 = FiniteGroup::cyclic(6);
    CHECK_THROWS(cohomology_dims(FGModule::trivial(c6), 2));
}

TEST_SUITE_END();
