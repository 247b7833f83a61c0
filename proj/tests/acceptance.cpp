/* Acceptance suite: every criterion runs exactly, prints one line, and
 * checks its wall-clock budget.  Exit code is the number of failures. */

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mstab/charts.hpp"
#include "mstab/comodule.hpp"
#include "mstab/fgl.hpp"
#include "mstab/pipeline.hpp"

using namespace mstab;

namespace {

int failures = 0;

template <class F>
void criterion(int id, const std::string& name, double budget_ms, F&& body) {
    auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
        body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = err.empty() && ms < budget_ms;
    if (!ok)
        ++failures;
    std::printf("[%s] %02d %-28s %8.1f ms (budget %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), ms, budget_ms, err.empty() ? "" : " error: ", err.c_str());
}

void require(bool cond, const std::string& what) {
    if (!cond)
        throw std::runtime_error(what);
}

}  // namespace

int main() {
    const unsigned k = 8;
    const int D = 16;

    criterion(1, "honda-two-series", 1000, [&] {
        Fgl F = honda_gamma2(D);
        SeriesF4 x4(1, D);
        x4.set(SMon::var(0, 4), F4::one());
        require(n_series(F, 2) == x4, "two-series is not x^4");
        std::vector<SeriesF4> powers;
        for (int d = 1; d <= D; d *= 4) {
            SeriesF4 t(1, D);
            t.set(SMon::var(0, uint8_t(d)), F4::one());
            powers.push_back(t);
        }
        require(n_series(F, -1) == formal_sum(F, powers), "formal inverse mismatch");
    });

    criterion(2, "fgl-axioms-degree-12", 30000, [&] {
        Fgl F = honda_gamma2(D);
        auto bad = check_fgl_axioms(F, 12);
        require(!bad.has_value(), bad.value_or(""));
    });

    criterion(3, "comodule-family", 10000, [&] {
        ComoduleFamily fam = solve_comodule_family();
        require(fam.structures.size() == 4, "wrong family size");
        for (const auto& s : fam.structures) {
            require(s.table == reference_comodule(s.a, s.b).table, "table mismatch");
            require(check_counit(s.table), "counit");
            require(!check_coassoc(s.table).has_value(), "coassoc");
            require(perturbation_robustness(s) > 0, "a perturbation survived");
        }
    });

    criterion(4, "comodule-reductions", 5000, [&] {
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                ComoduleStructure s = reference_comodule(a, b);
                require(reduce_mod_small(s) == reduced_reference_table(), "reduction mismatch");
                require(steenrod_double_check(s.table), "steenrod double mismatch");
            }
    });

    criterion(5, "stabilizer-constructions", 10000, [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        require(ttilde_profile(q.i).t1 == F4::one(), "t1(i)");
        require(ttilde_profile(q.j).t1 == F4::w(), "t1(j)");
        require(ttilde_profile(q.k).t1 == F4::w2(), "t1(k)");
        require(ttilde_profile(q.minus_one) == Profile{F4::one(), F4::zero(), F4::one()},
                "profile(-1)");
        require(ap.alpha.det_scalar() == (uint64_t(-1) & detail::mask_bits(k)), "det(alpha)");
        require(ap.pi.det_scalar() == 3, "det(pi)");
        O2 res = ap.alpha.inv() * ap.pi;
        require(filtration_tval(res) >= 4, "filtration of alpha^-1 pi");
        require(ttilde_profile(res) == Profile{F4::one(), F4::zero(), F4::zero()},
                "profile of alpha^-1 pi");
    });

    criterion(6, "product-tk-121-pairs", 10000, [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        std::vector<O2> set = {O2::one(k), q.minus_one, q.i,     -q.i,     q.j, -q.j,
                               q.k,        -q.k,        q.omega, ap.alpha, ap.pi};
        int n = 0;
        for (const auto& g1 : set)
            for (const auto& g2 : set) {
                require(product_tk_check(g1, g2), "a pair violates the convolution");
                ++n;
            }
        require(n == 121, "wrong pair count");
    });

    criterion(7, "regularity-criterion", 10000, [&] {
        Poly res = regularity_certificate();
        Poly c4(std::vector<std::string>{"a", "b", "c", "d"});
        c4.add_term({0, 0, 4, 0}, F4::one());
        require(res == c4, "det A != c^4");
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                require(regularity_test(q8_module(q, a, b)).regular, "Q8 module not regular");
                require(regularity_test(conjugate_q8_module(q, ap.pi, a, b)).regular,
                        "conjugate module not regular");
            }
        require(!regularity_test(split_v4v4_module(q)).regular, "split module regular");
    });

    criterion(8, "fixed-points-triviality", 5000, [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        std::vector<std::vector<F4>> xblock;
        for (int i = 0; i < 4; ++i) {
            std::vector<F4> v(8, F4::zero());
            v[size_t(i)] = F4::one();
            xblock.push_back(v);
        }
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                Mat rm = action_matrix(ttilde_profile(q.minus_one), a, b).mat;
                Mat ra = action_matrix(ttilde_profile(ap.alpha), a, b).mat;
                require(fixed_points({rm}) == xblock, "fix<-1>");
                require(fixed_points({ra}) == xblock, "fix<alpha>");
                TrivialityReport t = triviality_checks(q, ap, a, b);
                require(t.alpha_inv_pi_identity, "alpha^-1 pi is not the identity");
                require(t.alpha_fixes_x_block && t.minus_one_fixes_x_block &&
                            t.filtration2_trivial_on_x_block,
                        "F_{2/2} is not trivial on the fixed block");
            }
    });

    criterion(9, "group-cohomology", 120000, [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                auto pkg = q8_package(q8_module(q, a, b));
                require(cohomology_dims(pkg.module, 4) == std::vector<int>{1, 0, 0, 0, 0},
                        "H^*(Q8;E0Z)");
                CohomTable g24 = g24_cohomology(q8_module(q, a, b), q.omega);
                require(g24.dim(0, 0) == 1 && g24.dim(0, 2) == 0 && g24.dim(0, 4) == 0,
                        "G24 table");
                CohomTable c6 = c6_cohomology(q8_module(q, a, b), q.omega);
                require(c6.dim(0, 0) == 2 && c6.dim(0, 2) == 1 && c6.dim(0, 4) == 1,
                        "C6 table");
            }
        auto pkg = q8_package(q8_module(q, 0, 0));
        std::mt19937_64 rng(99);
        std::vector<std::vector<int>> subs = {{0}, {0, 1}, {0, 1, 2, 3}, {0, 1, 4, 5},
                                              {0, 1, 6, 7}};
        int n = 0;
        for (const auto& s : subs) {
            std::vector<int> embv;
            FiniteGroup H = pkg.group.subgroup(s, &embv);
            for (int t = 0; t < 4; ++t) {
                require(shapiro_check(pkg.group, embv, random_submodule(H, rng), 3),
                        "shapiro failed");
                ++n;
            }
        }
        require(n == 20, "wrong shapiro count");
    });

    criterion(10, "two-route-agreement", 30000, [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        CohomTable k1 = s12_via_k1();
        require(k1.dim(0, 0) == 1 && k1.dim(1, 0) == 1 && k1.dim(1, 2) == 1 &&
                    k1.dim(1, 4) == 1 && k1.dim(2, 0) == 1 && k1.dim(2, 2) == 1 &&
                    k1.dim(2, 4) == 1 && k1.dim(3, 0) == 1,
                "K1 route table");
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                DualityE1 e1 = duality_e1(q8_module(q, a, b),
                                          conjugate_q8_module(q, ap.pi, a, b), q.omega, ap.pi);
                DualityD1Report d1 = duality_d1(q, ap, a, b, 50);
                require(duality_e2(e1, d1) == k1, "route disagreement");
            }
    });

    criterion(11, "d1-structure", 30000, [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        DualityD1Report d1 = duality_d1(q, ap, 0, 0, 60);
        require(d1.d1_00_zero, "(1-alpha) does not kill the p=0 class");
        require(d1.d1_23_zero, "the p=2 operator does not vanish");
        require(d1.sampled_pairs >= 50, "not enough sampled pairs");
        require(d1.pairs_kill_x024, "a sampled operator moved x0, x2 or x4");
        require(d1.pairs_formula_on_x6, "the t~1 coefficient formula failed");
    });

    criterion(12, "charts", 5000, [&] {
        ChartPage e2 = hfpss_e2(s12_via_k1(), true);
        require(e2.classes.size() == 16, "class count");
        auto sc = d3_scenarios(e2);
        require(sc[0].einf.classes.size() == 16, "scenario A count");
        require(sc[1].einf.classes.size() == 14, "scenario B count");
        require(homotopy_table(sc[0]) == std::array<int, 6>{3, 2, 3, 3, 2, 3},
                "scenario A ranks");
        bool ruled = false;
        for (const auto& d : e2.differentials)
            if (d.source == "x_{0,0}" && d.status == "ruled_out")
                ruled = true;
        require(ruled, "bottom differential not ruled out");
        std::string j = emit_chart_json(e2);
        require(emit_chart_json(parse_chart_json(j)) == j, "round-trip not byte-stable");
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures;
}
