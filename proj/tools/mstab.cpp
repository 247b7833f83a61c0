#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "mstab/comodule.hpp"
#include "mstab/pipeline.hpp"

using namespace mstab;
using ordered_json = nlohmann::ordered_json;

namespace {

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    if (!out)
        throw ConfigError("cannot open output file " + cfg.out);
    out << text;
}

int report_and_exit(const RunConfig& cfg, const std::vector<CheckResult>& results) {
    write_output(cfg, report_json_lines(results));
    return all_passed(results) ? 0 : 1;
}

ordered_json o2_json(const O2& g) {
    ordered_json j;
    j["a"] = {std::to_string(g.a.c0), std::to_string(g.a.c1)};
    j["b"] = {std::to_string(g.b.c0), std::to_string(g.b.c1)};
    j["k"] = g.prec();
    return j;
}

ordered_json profile_json(const Profile& p) {
    return ordered_json::array({p.t0.str(), p.t1.str(), p.t2.str()});
}

std::string stabilizer_dump(const RunConfig& cfg) {
    QuatEmbedding q = find_quaternion_embedding(cfg.precision);
    AlphaPi ap = construct_alpha_pi(cfg.precision);
    ordered_json j;
    j["omega"] = o2_json(q.omega);
    j["i"] = o2_json(q.i);
    j["j"] = o2_json(q.j);
    j["k"] = o2_json(q.k);
    j["alpha"] = o2_json(ap.alpha);
    j["pi"] = o2_json(ap.pi);
    ordered_json profiles;
    profiles["i"] = profile_json(ttilde_profile(q.i));
    profiles["j"] = profile_json(ttilde_profile(q.j));
    profiles["k"] = profile_json(ttilde_profile(q.k));
    profiles["minus_one"] = profile_json(ttilde_profile(q.minus_one));
    profiles["omega"] = profile_json(ttilde_profile(q.omega));
    profiles["alpha"] = profile_json(ttilde_profile(ap.alpha));
    profiles["pi"] = profile_json(ttilde_profile(ap.pi));
    j["profiles"] = profiles;
    ordered_json dets;
    dets["alpha"] = std::to_string(ap.alpha.det_scalar());
    dets["pi"] = std::to_string(ap.pi.det_scalar());
    j["dets"] = dets;
    j["filtration_tval"] = {{"alpha_inv_pi", filtration_tval(ap.alpha.inv() * ap.pi)}};
    return j.dump(2) + "\n";
}

std::string comodule_dump(const RunConfig& cfg) {
    ComoduleFamily fam = solve_comodule_family();
    if (cfg.format == "json") {
        ordered_json j;
        j["structures"] = ordered_json::array();
        for (const auto& s : fam.structures) {
            ordered_json js;
            js["a"] = s.a;
            js["b"] = s.b;
            ordered_json coaction;
            for (int g = 0; g < s.table.ngens(); ++g) {
                ordered_json row = ordered_json::array();
                for (const auto& [m, tgt] : s.table.psi[size_t(g)])
                    row.push_back(m.str() + "|" + s.table.names[size_t(tgt)]);
                coaction[s.table.names[size_t(g)]] = row;
            }
            js["coaction"] = coaction;
            j["structures"].push_back(js);
        }
        j["relations"] = fam.relations;
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& s : fam.structures) {
        out += "(a,b) = (" + std::to_string(s.a) + "," + std::to_string(s.b) + ")\n";
        out += s.table.str() + "\n";
    }
    out += "solved relations:\n";
    for (const auto& rel : fam.relations)
        out += "  " + rel + "\n";
    return out;
}

std::string action_dump(const RunConfig& cfg) {
    QuatEmbedding q = find_quaternion_embedding(cfg.precision);
    auto [a, b] = cfg.ab.value_or(std::make_pair(0, 0));
    GModuleSpec spec = q8_module(q, a, b);
    RegularityVerdict v = regularity_test(spec);
    ordered_json j;
    j["a"] = a;
    j["b"] = b;
    ordered_json mats;
    for (int g = 0; g < 8; ++g) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < 8; ++i)
            for (int c = 0; c < 8; ++c)
                rows.push_back(spec.rep[size_t(g)].mat.at(i, c).str());
        mats[kQ8Names[size_t(g)]] = rows;
    }
    j["matrices_row_major"] = mats;
    j["regular"] = v.regular;
    j["normal_form_parameters"] = {v.pa.str(), v.pb.str(), v.pc.str(), v.pd.str()};
    j["det_translates"] = v.det_translates.str();
    return j.dump(2) + "\n";
}

std::string cohomology_dump(const RunConfig& cfg, const std::string& group) {
    QuatEmbedding q = find_quaternion_embedding(cfg.precision);
    AlphaPi ap = construct_alpha_pi(cfg.precision);
    auto [a, b] = cfg.ab.value_or(std::make_pair(0, 0));
    GModuleSpec spec = q8_module(q, a, b);
    CohomTable table;
    if (group == "q8") {
        auto pkg = q8_package(spec);
        auto dims = cohomology_dims(pkg.module, cfg.pmax);
        for (int p = 0; p <= cfg.pmax; ++p)
            for (int t = 0; t < 6; t += 2)
                table.set(p, t, dims[size_t(p)]);  // one line per even degree
    } else if (group == "g24") {
        table = g24_cohomology(spec, q.omega);
    } else if (group == "c6") {
        table = c6_cohomology(spec, q.omega);
    } else if (group == "g24p") {
        table = g24_cohomology(conjugate_q8_module(q, ap.pi, a, b), q.omega.conj_by(ap.pi));
    } else if (group == "s12") {
        table = s12_via_k1();
    } else {
        throw ConfigError("unknown group " + group);
    }
    if (cfg.format == "json") {
        std::string out;
        for (const auto& [key, d] : table.dims) {
            ordered_json j;
            j["p"] = key.first;
            j["t_mod_6"] = key.second;
            j["dim"] = d;
            out += j.dump() + "\n";
        }
        return out;
    }
    return table.str();
}

std::string chart_dump(const RunConfig& cfg) {
    ChartPage e2 = hfpss_e2(s12_via_k1(), true);
    auto scenarios = d3_scenarios(e2);
    const ChartPage& page = cfg.scenario == 'A' ? scenarios[0].einf : scenarios[1].einf;
    if (cfg.format == "svg")
        return emit_chart_svg(page);
    if (cfg.format == "ascii" || cfg.format == "text")
        return emit_chart_ascii(page);
    return emit_chart_json(page);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the height-2 stabilizer action and its charts"};
    app.require_subcommand(1);

    std::string config_path;
    RunConfig flags;  // flag values land here, merged over the config file
    bool precision_set = false, degree_set = false, a_set = false, b_set = false;
    bool pmax_set = false, scenario_set = false, format_set = false, out_set = false;
    int flag_a = 0, flag_b = 0, flag_pmax = 4;
    unsigned flag_precision = 8;
    int flag_degree = 16;
    std::string flag_scenario = "A", flag_format, flag_out;

    app.add_option("--config", config_path, "configuration file (key = value)");
    app.add_option("--precision", flag_precision, "Witt precision k")
        ->each([&](const std::string&) { precision_set = true; });
    app.add_option("--series-degree", flag_degree, "FGL degree cap D")
        ->each([&](const std::string&) { degree_set = true; });
    app.add_option("--a", flag_a, "comodule parameter a")
        ->each([&](const std::string&) { a_set = true; });
    app.add_option("--b", flag_b, "comodule parameter b")
        ->each([&](const std::string&) { b_set = true; });
    app.add_option("--pmax", flag_pmax, "top cohomological degree")
        ->each([&](const std::string&) { pmax_set = true; });
    app.add_option("--scenario", flag_scenario, "differential scenario A or B")
        ->each([&](const std::string&) { scenario_set = true; });
    app.add_option("--format", flag_format, "output format (text|json|ascii|svg)")
        ->each([&](const std::string&) { format_set = true; });
    app.add_option("--out", flag_out, "output path (default stdout)")
        ->each([&](const std::string&) { out_set = true; });

    auto* fgl_cmd = app.add_subcommand("fgl", "formal group law checks");
    fgl_cmd->add_subcommand("verify", "verify the Honda law identities")->fallthrough();
    auto* stab_cmd = app.add_subcommand("stabilizer", "stabilizer group constructions");
    stab_cmd->add_subcommand("build", "construct omega, i, j, k, alpha, pi and dump them")
        ->fallthrough();
    auto* com_cmd = app.add_subcommand("comodule", "comodule structures");
    com_cmd->add_subcommand("solve", "solve the coaction ansatz")->fallthrough();
    std::string emit_format;
    com_cmd->add_option("--emit", emit_format, "emit format (json|text)");
    auto* act_cmd = app.add_subcommand("action", "module structure of the action");
    act_cmd->add_subcommand("verify", "verify regularity and dump the matrices")->fallthrough();
    act_cmd->add_option("--emit", emit_format, "emit format (json|text)");
    auto* coh_cmd = app.add_subcommand("cohomology", "group cohomology tables");
    auto* coh_compute = coh_cmd->add_subcommand("compute", "compute a dimension table");
    coh_compute->fallthrough();
    std::string coh_group = "q8";
    coh_compute->add_option("--group", coh_group, "q8|g24|c6|g24p|s12");
    coh_compute->add_option("--emit", emit_format, "emit format (json|text)");
    auto* dual_cmd = app.add_subcommand("duality", "duality resolution spectral sequence");
    dual_cmd->add_subcommand("run", "run the E1/d1/E2 checks")->fallthrough();
    auto* hf_cmd = app.add_subcommand("hfpss", "homotopy fixed point charts");
    hf_cmd->add_subcommand("chart", "emit a chart page")->fallthrough();
    auto* all_cmd = app.add_subcommand("all", "the full verification pipeline");
    for (auto* sub : {fgl_cmd, stab_cmd, com_cmd, act_cmd, coh_cmd, dual_cmd, hf_cmd, all_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty())
            cfg = RunConfig::from_file(config_path);
        if (precision_set)
            cfg.precision = flag_precision;
        if (degree_set)
            cfg.series_degree = flag_degree;
        if (a_set)
            cfg.ab = {flag_a, cfg.ab ? cfg.ab->second : 0};
        if (b_set)
            cfg.ab = {cfg.ab ? cfg.ab->first : 0, flag_b};
        if (pmax_set)
            cfg.pmax = flag_pmax;
        if (scenario_set) {
            if (flag_scenario.size() != 1)
                throw ConfigError("scenario must be A or B");
            cfg.scenario = flag_scenario[0];
        }
        if (format_set)
            cfg.format = flag_format;
        if (out_set)
            cfg.out = flag_out;
        if (!emit_format.empty())
            cfg.format = emit_format;
        cfg.validate();

        if (*fgl_cmd)
            return report_and_exit(cfg, run_fgl_checks(cfg));
        if (*stab_cmd) {
            auto results = run_stabilizer_checks(cfg);
            write_output(cfg, stabilizer_dump(cfg) + report_json_lines(results));
            return all_passed(results) ? 0 : 1;
        }
        if (*com_cmd) {
            auto results = run_comodule_checks(cfg);
            write_output(cfg, comodule_dump(cfg) + report_json_lines(results));
            return all_passed(results) ? 0 : 1;
        }
        if (*act_cmd) {
            auto results = run_action_checks(cfg);
            std::string dump = cfg.format == "json" ? action_dump(cfg) : "";
            write_output(cfg, dump + report_json_lines(results));
            return all_passed(results) ? 0 : 1;
        }
        if (*coh_cmd) {
            auto results = run_cohomology_checks(cfg);
            write_output(cfg, cohomology_dump(cfg, coh_group) + report_json_lines(results));
            return all_passed(results) ? 0 : 1;
        }
        if (*dual_cmd)
            return report_and_exit(cfg, run_duality_checks(cfg));
        if (*hf_cmd) {
            auto results = run_chart_checks(cfg);
            write_output(cfg, chart_dump(cfg));
            return all_passed(results) ? 0 : 1;
        }
        if (*all_cmd)
            return report_and_exit(cfg, run_all(cfg));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
