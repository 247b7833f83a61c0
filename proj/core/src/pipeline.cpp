#include "mstab/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>

#include "mstab/comodule.hpp"
#include "mstab/fgl.hpp"

namespace mstab {

void RunConfig::validate() const {
    if (precision < 4)
        throw ConfigError("precision must be at least 4");
    if (precision > 60)
        throw ConfigError("precision must be at most 60");
    if (series_degree < 8)
        throw ConfigError("series degree must be at least 8");
    if (series_degree > 64)
        throw ConfigError("series degree must be at most 64");
    if (pmax < 0 || pmax > 4)
        throw ConfigError("pmax must lie in [0,4]");
    if (ab) {
        if (ab->first < 0 || ab->first > 1 || ab->second < 0 || ab->second > 1)
            throw ConfigError("comodule parameters a, b must be 0 or 1");
    }
    if (scenario != 'A' && scenario != 'B')
        throw ConfigError("scenario must be A or B");
    if (format != "text" && format != "json" && format != "svg" && format != "ascii")
        throw ConfigError("format must be one of text, json, svg, ascii");
}

void RunConfig::apply_key(const std::string& key, const std::string& value) {
    auto as_int = [&](const std::string& v) {
        size_t used = 0;
        int n = std::stoi(v, &used);
        if (used != v.size())
            throw ConfigError("bad integer for " + key + ": " + v);
        return n;
    };
    if (key == "precision")
        precision = unsigned(as_int(value));
    else if (key == "series_degree")
        series_degree = as_int(value);
    else if (key == "a") {
        int a = as_int(value);
        ab = {a, ab ? ab->second : 0};
    } else if (key == "b") {
        int b = as_int(value);
        ab = {ab ? ab->first : 0, b};
    } else if (key == "pmax")
        pmax = as_int(value);
    else if (key == "scenario") {
        if (value.size() != 1)
            throw ConfigError("scenario must be A or B");
        scenario = value[0];
    } else if (key == "format")
        format = value;
    else if (key == "out")
        out = value;
    else
        throw ConfigError("unknown configuration key: " + key);
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty())
            cfg.apply_key(key, value);
    }
    return cfg;
}

/**** the check battery ****/

namespace {

struct Runner {
    std::vector<CheckResult> results;

    template <class F>
    void run(const std::string& name, F&& body) {
        CheckResult r;
        r.check = name;
        auto start = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
                   .count();
        results.push_back(std::move(r));
    }
};

std::string expect(bool ok, const std::string& what) {
    if (!ok)
        throw std::runtime_error(what);
    return what;
}

std::vector<std::pair<int, int>> ab_list(const RunConfig& cfg) {
    if (cfg.ab)
        return {*cfg.ab};
    return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
}

}  // namespace

std::vector<CheckResult> run_fgl_checks(const RunConfig& cfg) {
    Runner r;
    int D = cfg.series_degree;
    r.run("fgl.two_series", [&] {
        Fgl F = honda_gamma2(D);
        SeriesF4 x4(1, D);
        x4.set(SMon::var(0, 4), F4::one());
        return expect(n_series(F, 2) == x4, "[2](x) = x^4 at D = " + std::to_string(D));
    });
    r.run("fgl.formal_inverse", [&] {
        Fgl F = honda_gamma2(D);
        std::vector<SeriesF4> terms;
        for (long long d = 1; d <= D; d *= 4) {
            SeriesF4 t(1, D);
            t.set(SMon::var(0, uint8_t(d)), F4::one());
            terms.push_back(t);
        }
        return expect(n_series(F, -1) == formal_sum(F, terms),
                      "[-1](x) = sum^F x^{4^n} truncated at D");
    });
    r.run("fgl.axioms", [&] {
        Fgl F = honda_gamma2(D);
        auto bad = check_fgl_axioms(F, 12);
        return expect(!bad.has_value(),
                      bad ? *bad : "unit, commutativity, associativity to degree 12");
    });
    return r.results;
}

std::vector<CheckResult> run_stabilizer_checks(const RunConfig& cfg) {
    Runner r;
    unsigned k = cfg.precision;
    r.run("stabilizer.embedding", [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        Profile pm = ttilde_profile(q.minus_one);
        expect(pm == Profile{F4::one(), F4::zero(), F4::one()}, "profile(-1) = (1,0,1)");
        return std::string("Q8 relations and t~ normalization hold at k = ") +
               std::to_string(k);
    });
    r.run("stabilizer.alpha_pi", [&] {
        AlphaPi ap = construct_alpha_pi(k);
        uint64_t mask = detail::mask_bits(k);
        expect(ap.alpha.det_scalar() == (uint64_t(-1) & mask), "det(alpha) = -1");
        expect(ap.pi.det_scalar() == 3, "det(pi) = 3");
        O2 res = ap.alpha.inv() * ap.pi;
        expect(filtration_tval(res) >= 4, "alpha^-1 pi in F_{4/2}");
        expect(ttilde_profile(res) == Profile{F4::one(), F4::zero(), F4::zero()},
               "profile(alpha^-1 pi) = (1,0,0)");
        return std::string("alpha, pi verified");
    });
    r.run("stabilizer.product_tk", [&] {
        QuatEmbedding q = find_quaternion_embedding(k);
        AlphaPi ap = construct_alpha_pi(k);
        std::vector<O2> set = {O2::one(k), q.minus_one, q.i,  -q.i,    q.j, -q.j,
                               q.k,        -q.k,        q.omega, ap.alpha, ap.pi};
        int n = 0;
        for (const auto& g1 : set)
            for (const auto& g2 : set) {
                expect(product_tk_check(g1, g2), "product_tk failed on a pair");
                ++n;
            }
        return std::to_string(n) + " pairs satisfy the t~ convolution";
    });
    return r.results;
}

std::vector<CheckResult> run_comodule_checks(const RunConfig& cfg) {
    Runner r;
    r.run("comodule.solve", [&] {
        ComoduleFamily fam = solve_comodule_family();
        expect(fam.structures.size() == 4, "exactly four structures");
        for (const auto& s : fam.structures) {
            expect(s.table == reference_comodule(s.a, s.b).table, "term-for-term match with the table");
            expect(check_counit(s.table), "counit");
            expect(!check_coassoc(s.table).has_value(), "coassociativity");
            expect(s.table.degree_homogeneous(), "degree homogeneity");
        }
        return std::string("4 structures, term-for-term");
    });
    r.run("comodule.perturbations", [&] {
        int total = 0;
        for (auto [a, b] : ab_list(cfg)) {
            int n = perturbation_robustness(reference_comodule(a, b));
            expect(n > 0, "a single-coefficient flip survived the checks");
            total += n;
        }
        return std::to_string(total) + " flips all break counit or coassociativity";
    });
    r.run("comodule.reduction", [&] {
        for (auto [a, b] : ab_list(cfg))
            expect(reduce_mod_small(reference_comodule(a, b)) == reduced_reference_table(),
                   "reduction mod (v2,t1^4,t2^2) matches for all parameters");
        return std::string("reduction matches the reference table");
    });
    r.run("comodule.steenrod_double", [&] {
        for (auto [a, b] : ab_list(cfg))
            expect(steenrod_double_check(reference_comodule(a, b).table), "homology coaction match");
        expect(steenrod_double_check(make_gblock()), "M block against the xi1-only subtable");
        return std::string("doubling map lands on the homology coaction");
    });
    r.run("comodule.exact_sequence", [&] {
        for (auto [a, b] : ab_list(cfg))
            expect(exact_sequence_check(reference_comodule(a, b)), "M -> Z -> suspended M");
        return std::string("iota and tau are comodule maps");
    });
    return r.results;
}

std::vector<CheckResult> run_action_checks(const RunConfig& cfg) {
    Runner r;
    unsigned k = cfg.precision;
    QuatEmbedding q = find_quaternion_embedding(k);
    AlphaPi ap = construct_alpha_pi(k);
    r.run("action.q8_module", [&] {
        for (auto [a, b] : ab_list(cfg))
            q8_module(q, a, b);  // throws unless rep respects the table
        return std::string("rep is multiplicative on all 64 pairs");
    });
    r.run("action.regularity", [&] {
        for (auto [a, b] : ab_list(cfg)) {
            expect(regularity_test(q8_module(q, a, b)).regular, "Q8 module regular");
            expect(regularity_test(conjugate_q8_module(q, ap.pi, a, b)).regular,
                   "conjugate Q8 module regular");
        }
        expect(!regularity_test(split_v4v4_module(q)).regular, "V4+V4 is not regular");
        return std::string("regular for all parameters, split module rejected");
    });
    r.run("action.certificate", [&] {
        Poly res = regularity_certificate();
        Poly expected(std::vector<std::string>{"a", "b", "c", "d"});
        expected.add_term({0, 0, 4, 0}, F4::one());
        expect(res == expected, "det A = c^4");
        return std::string("det A = c^4 symbolically");
    });
    r.run("action.fixed_points", [&] {
        for (auto [a, b] : ab_list(cfg)) {
            Mat mm = action_matrix(ttilde_profile(q.minus_one), a, b).mat;
            Mat ma = action_matrix(ttilde_profile(ap.alpha), a, b).mat;
            auto want = std::vector<std::vector<F4>>();
            for (int i = 0; i < 4; ++i) {
                std::vector<F4> v(8, F4::zero());
                v[size_t(i)] = F4::one();
                want.push_back(v);
            }
            expect(fixed_points({mm}) == want, "fix<-1> = span{x0,x2,x4,x6}");
            expect(fixed_points({ma}) == want, "fix<alpha> = span{x0,x2,x4,x6}");
        }
        return std::string("both fixed submodules are the x block");
    });
    r.run("action.triviality", [&] {
        for (auto [a, b] : ab_list(cfg)) {
            TrivialityReport t = triviality_checks(q, ap, a, b);
            expect(t.alpha_inv_pi_identity, "alpha^-1 pi acts as the identity");
            expect(t.alpha_fixes_x_block && t.minus_one_fixes_x_block,
                   "F_{2/2} generators trivial on the fixed block");
            expect(t.filtration2_trivial_on_x_block, "sampled F_{2/2} elements trivial there");
            expect(t.alpha_nontrivial_on_y6, "alpha moves y6");
        }
        return std::string("triviality statements verified");
    });
    r.run("action.composition", [&] {
        std::vector<O2> set = {q.i, q.j, q.k, q.minus_one, ap.alpha};
        for (auto [a, b] : ab_list(cfg))
            for (const auto& g : set)
                for (const auto& h : set)
                    expect(composition_compat(g, h, a, b), "pairwise compatibility");
        return std::string("matrix of a product = reversed product of matrices");
    });
    return r.results;
}

std::vector<CheckResult> run_cohomology_checks(const RunConfig& cfg) {
    Runner r;
    unsigned k = cfg.precision;
    QuatEmbedding q = find_quaternion_embedding(k);
    r.run("cohomology.q8", [&] {
        for (auto [a, b] : ab_list(cfg)) {
            auto pkg = q8_package(q8_module(q, a, b));
            auto dims = cohomology_dims(pkg.module, cfg.pmax);
            expect(dims[0] == 1, "H^0 is a line");
            for (int p = 1; p <= cfg.pmax; ++p)
                expect(dims[size_t(p)] == 0, "H^p = 0 for p > 0");
        }
        return std::string("H^*(Q8; E0Z) = (1,0,0,0,0)");
    });
    r.run("cohomology.g24", [&] {
        for (auto [a, b] : ab_list(cfg)) {
            CohomTable t = g24_cohomology(q8_module(q, a, b), q.omega);
            CohomTable want;
            want.set(0, 0, 1);
            expect(t == want, "the u^{+-3}-periodic line");
        }
        return std::string("H^*(G24; E_*Z) = F4[u^{+-3}] in p = 0");
    });
    r.run("cohomology.c6", [&] {
        for (auto [a, b] : ab_list(cfg)) {
            CohomTable t = c6_cohomology(q8_module(q, a, b), q.omega);
            CohomTable want;
            want.set(0, 0, 2);
            want.set(0, 2, 1);
            want.set(0, 4, 1);
            expect(t == want, "rank 4 per period, concentrated in q = 0");
        }
        return std::string("H^*(C6; E_*Z) is rank 4 in q = 0");
    });
    r.run("cohomology.shapiro", [&] {
        auto pkg = q8_package(q8_module(q, 0, 0));
        std::mt19937_64 rng(0x5A51);
        std::vector<std::vector<int>> subs = {{0}, {0, 1}, {0, 1, 2, 3}, {0, 1, 4, 5},
                                              {0, 1, 6, 7}};
        int n = 0;
        for (const auto& s : subs) {
            std::vector<int> emb;
            FiniteGroup H = pkg.group.subgroup(s, &emb);
            for (int t = 0; t < 4; ++t) {
                FGModule M = random_submodule(H, rng);
                expect(shapiro_check(pkg.group, emb, M, 3), "induced dims match");
                ++n;
            }
        }
        return std::to_string(n) + " induced modules match subgroup cohomology";
    });
    return r.results;
}

std::vector<CheckResult> run_duality_checks(const RunConfig& cfg) {
    Runner r;
    unsigned k = cfg.precision;
    QuatEmbedding q = find_quaternion_embedding(k);
    AlphaPi ap = construct_alpha_pi(k);
    r.run("duality.e1", [&] {
        auto [a, b] = ab_list(cfg)[0];
        auto e1 = duality_e1(q8_module(q, a, b), conjugate_q8_module(q, ap.pi, a, b),
                             q.omega, ap.pi);
        int per_col[4] = {0, 0, 0, 0};
        for (const auto& [key, d] : e1.table.dims)
            per_col[key.first] += d;
        expect(per_col[0] == 1 && per_col[1] == 4 && per_col[2] == 4 && per_col[3] == 1,
               "column ranks (1,4,4,1)");
        return std::string("E1 columns have ranks (1,4,4,1)");
    });
    r.run("duality.d1", [&] {
        auto [a, b] = ab_list(cfg)[0];
        DualityD1Report rep = duality_d1(q, ap, a, b, 60);
        expect(rep.d1_00_zero, "(e - alpha) kills the p = 0 class");
        expect(rep.d1_23_zero, "the p = 2 operator annihilates the column");
        expect(rep.pairs_kill_x024 && rep.sampled_pairs >= 50,
               "sampled operators kill x0, x2, x4");
        expect(rep.pairs_formula_on_x6, "x6 lands on the x0 line with the t~1 coefficient");
        expect(rep.lambda_nonzero, "lambda is a unit by the K^1-route rank");
        return std::to_string(rep.sampled_pairs) + " sampled pairs verified";
    });
    r.run("duality.e2_vs_k1", [&] {
        auto [a, b] = ab_list(cfg)[0];
        auto e1 = duality_e1(q8_module(q, a, b), conjugate_q8_module(q, ap.pi, a, b),
                             q.omega, ap.pi);
        auto d1 = duality_d1(q, ap, a, b, 60);
        CohomTable e2 = duality_e2(e1, d1);
        expect(e2 == s12_via_k1(), "the duality route equals the K^1 route");
        return std::string("both routes give ranks (1,3,3,1) in degrees {0},{0,2,4},{2,4,6},{0}");
    });
    return r.results;
}

std::vector<CheckResult> run_chart_checks(const RunConfig& cfg) {
    Runner r;
    (void)cfg;
    r.run("charts.e2_table", [&] {
        ChartPage e2 = hfpss_e2(s12_via_k1(), true);
        expect(e2.classes.size() == 16, "16 classes per v2-period");
        int s4 = 0;
        for (const auto& c : e2.classes) {
            expect(c.s <= 4, "no class above filtration 4");
            if (c.s == 4)
                ++s4;
        }
        expect(s4 == 1, "filtration 4 is the single zeta class");
        return std::string("E2 page matches the table");
    });
    r.run("charts.scenarios", [&] {
        ChartPage e2 = hfpss_e2(s12_via_k1(), true);
        auto sc = d3_scenarios(e2);
        expect(sc.size() == 2, "two scenarios");
        expect(sc[0].einf.classes.size() == 16, "A keeps all classes");
        expect(sc[1].einf.classes.size() == 14, "B loses two families");
        bool ruled = false;
        for (const auto& d : sc[0].einf.differentials)
            if (d.status == "ruled_out" && d.source == "x_{0,0}")
                ruled = true;
        expect(ruled, "d3 on the bottom class is ruled out");
        for (const auto& d : e2.differentials)
            expect(d.tgt_s == d.src_s + 3 && d.tgt_stem == d.src_stem - 1,
                   "d3 bigrading (s+3, stem-1)");
        return std::string("scenarios A and B with the ruled-out family");
    });
    r.run("charts.homotopy_ranks", [&] {
        ChartPage e2 = hfpss_e2(s12_via_k1(), true);
        auto sc = d3_scenarios(e2);
        auto ranks = homotopy_table(sc[0]);
        /* independent enumeration of E(a1,a3,a5,zeta) (x) F2[v2^{+-1}] */
        std::array<int, 6> oracle{};
        const int degs[4] = {1, 3, 5, -1};
        for (int m = 0; m < 16; ++m) {
            int s = 0;
            for (int i = 0; i < 4; ++i)
                if (m & (1 << i))
                    s += degs[i];
            ++oracle[size_t(((s % 6) + 6) % 6)];
        }
        expect(ranks == oracle, "scenario A matches the exterior algebra ranks");
        int totalb = 0;
        for (int x : homotopy_table(sc[1]))
            totalb += x;
        expect(totalb == 14, "scenario B total");
        return std::string("ranks (3,2,3,3,2,3) per stem mod 6");
    });
    r.run("charts.extensions", [&] {
        auto ann = extension_annotations();
        int open = 0, ruled = 0;
        for (const auto& e : ann) {
            if (e.status == "open")
                ++open;
            if (e.status == "ruled_out")
                ++ruled;
        }
        expect(open >= 1, "at least one open annotation");
        expect(ruled == 2, "the two eliminated 2-extension families");
        return std::to_string(open) + " open, 2 ruled out";
    });
    r.run("charts.json_roundtrip", [&] {
        ChartPage e2 = hfpss_e2(s12_via_k1(), true);
        std::string j1 = emit_chart_json(e2);
        std::string j2 = emit_chart_json(parse_chart_json(j1));
        expect(j1 == j2, "emit -> parse -> emit is byte-identical");
        return std::string("round-trip is byte-stable");
    });
    return r.results;
}

std::vector<CheckResult> run_all(const RunConfig& cfg) {
    cfg.validate();
    std::vector<CheckResult> all;
    for (auto part : {run_fgl_checks, run_stabilizer_checks, run_comodule_checks,
                      run_action_checks, run_cohomology_checks, run_duality_checks,
                      run_chart_checks}) {
        auto rs = part(cfg);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    return all;
}

std::string report_json_lines(const std::vector<CheckResult>& results) {
    std::string out;
    for (const auto& r : results) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["status"] = r.pass ? "pass" : "fail";
        j["detail"] = r.detail;
        j["ms"] = r.ms;
        out += j.dump() + "\n";
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

}  // namespace mstab
