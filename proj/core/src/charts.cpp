#include "mstab/charts.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace mstab {

using ordered_json = nlohmann::ordered_json;

static std::string class_name(int s, int d, bool zeta, int v2pow = 0) {
    std::string n;
    if (v2pow == 1)
        n += "v2 ";
    else if (v2pow != 0)
        n += "v2^{" + std::to_string(v2pow) + "} ";
    if (zeta)
        n += "zeta ";
    n += "x_{" + std::to_string(s) + "," + std::to_string(d) + "}";
    return n;
}

ChartPage hfpss_e2(const CohomTable& h_s21, bool collapse_verified) {
    if (!collapse_verified)
        throw std::invalid_argument(
            "hfpss_e2: the Lyndon-Hochschild-Serre collapse (trivial alpha^-1 pi action) "
            "must be verified first");
    ChartPage page;
    page.page = "E2";
    for (const auto& [key, dim] : h_s21.dims) {
        auto [s, d] = key;
        /* the S_2^1 answer is multiplicity-free per (s, deg mod 6) */
        if (dim != 1)
            throw std::invalid_argument("hfpss_e2: unexpected multiplicity in the input table");
        /* canonical degree labels: the s = 2 column carries x_{2,2},
         * x_{2,4}, x_{2,6}, so its degree-0 family is labeled 6 */
        if (s == 2 && d == 0)
            d = 6;
        page.classes.push_back({s, d - s, class_name(s, d, false), false});
        page.classes.push_back({s + 1, d - s - 1, class_name(s, d, true), true});
    }
    std::sort(page.classes.begin(), page.classes.end(),
              [](const ChartClass& l, const ChartClass& r) {
                  return std::tie(l.s, l.stem, l.zeta, l.name) <
                         std::tie(r.s, r.stem, r.zeta, r.name);
              });

    /* the two candidate v2-linear d3 families; the bottom-cell one is dead
     * on arrival since x_{0,0} carries the image of the bottom cell */
    ChartDifferential dead;
    dead.source = class_name(0, 0, false);
    dead.target = class_name(2, 2, true);  // the circle at (s,stem) = (3,-1)
    dead.status = "ruled_out";
    dead.reason = "bottom-cell class is a permanent cycle (2 iota = 0 in pi_0)";
    dead.src_s = 0;
    dead.src_stem = 0;
    dead.tgt_s = 3;
    dead.tgt_stem = -1;
    page.differentials.push_back(dead);

    ChartDifferential cand;
    cand.source = class_name(1, 4, false);
    cand.target = class_name(3, 0, true, 1);  // v2 zeta x_{3,0}
    cand.status = "possible";
    cand.reason = "not excluded by the bottom-cell argument";
    cand.src_s = 1;
    cand.src_stem = 3;
    cand.tgt_s = 4;
    cand.tgt_stem = 2;
    page.differentials.push_back(cand);

    page.extensions = extension_annotations();
    return page;
}

std::vector<Scenario> d3_scenarios(const ChartPage& e2) {
    std::vector<Scenario> out;
    {
        Scenario a;
        a.label = 'A';
        a.einf = e2;
        a.einf.page = "Einf-A";
        out.push_back(std::move(a));
    }
    {
        Scenario b;
        b.label = 'B';
        b.einf = e2;
        b.einf.page = "Einf-B";
        for (auto& d : b.einf.differentials)
            if (d.status == "possible")
                d.status = "imposed";
        /* the x_{1,4} and zeta x_{3,0} families die */
        auto& cls = b.einf.classes;
        cls.erase(std::remove_if(cls.begin(), cls.end(),
                                 [](const ChartClass& c) {
                                     return c.name == class_name(1, 4, false) ||
                                            c.name == class_name(3, 0, true);
                                 }),
                  cls.end());
        out.push_back(std::move(b));
    }
    return out;
}

std::array<int, 6> homotopy_table(const Scenario& sc) {
    std::array<int, 6> ranks{};
    for (const auto& c : sc.einf.classes)
        ++ranks[size_t(((c.stem % 6) + 6) % 6)];
    return ranks;
}

std::vector<ChartExtension> extension_annotations() {
    std::vector<ChartExtension> out;
    auto open = [&](std::string src, std::string tgt) {
        out.push_back({std::move(src), std::move(tgt), "open",
                       "not excluded; conjecturally zero"});
    };
    /* the dotted candidates of the summary chart, one per v2-family */
    open(class_name(1, 0, false), class_name(2, 2, true));        // 2 x_{1,0} = zeta x_{2,2}
    open(class_name(1, 2, false), class_name(2, 4, true));        // 2 x_{1,2} = zeta x_{2,4}
    open(class_name(1, 4, false), class_name(3, 0, false, 1));    // 2 x_{1,4} = v2 x_{3,0}
    open(class_name(1, 4, false), class_name(2, 6, true));        // 2 x_{1,4} = zeta x_{2,6}
    open(class_name(1, 4, true), class_name(3, 0, true, 1));      // 2 zeta x_{1,4} = v2 zeta x_{3,0}
    open(class_name(2, 4, false), class_name(3, 0, true, 1));     // 2 x_{2,4} = v2 zeta x_{3,0}
    /* ruled out by pi_0(Z) = Z/2 and zeta-linearity */
    out.push_back({class_name(0, 0, false), class_name(2, 2, false), "ruled_out",
                   "pi_0(Z) = Z/2 forces 2 iota = 0"});
    out.push_back({class_name(0, 0, true), class_name(2, 2, true), "ruled_out",
                   "2 (zeta~ . iota) = zeta~ . (2 iota) = 0"});
    return out;
}

/**** rendering ****/

std::string emit_chart_json(const ChartPage& page) {
    ordered_json j;
    j["page"] = page.page;
    j["period"] = page.period;
    j["classes"] = ordered_json::array();
    for (const auto& c : page.classes) {
        ordered_json jc;
        jc["s"] = c.s;
        jc["stem"] = c.stem;
        jc["name"] = c.name;
        jc["zeta"] = c.zeta;
        j["classes"].push_back(jc);
    }
    j["differentials"] = ordered_json::array();
    for (const auto& d : page.differentials) {
        ordered_json jd;
        jd["r"] = d.r;
        jd["source"] = d.source;
        jd["target"] = d.target;
        jd["status"] = d.status;
        jd["reason"] = d.reason;
        j["differentials"].push_back(jd);
    }
    j["extensions"] = ordered_json::array();
    for (const auto& e : page.extensions) {
        ordered_json je;
        je["source"] = e.source;
        je["target"] = e.target;
        je["status"] = e.status;
        je["reason"] = e.reason;
        j["extensions"].push_back(je);
    }
    return j.dump(2) + "\n";
}

/* recover (s, stem) from a family name "v2^{p} zeta x_{s,d}" */
static void parse_class_name(const std::string& name, int& s, int& stem) {
    std::string rest = name;
    int v2pow = 0;
    bool zeta = false;
    if (rest.rfind("v2^{", 0) == 0) {
        size_t close = rest.find('}');
        v2pow = std::stoi(rest.substr(4, close - 4));
        rest = rest.substr(close + 2);
    } else if (rest.rfind("v2 ", 0) == 0) {
        v2pow = 1;
        rest = rest.substr(3);
    }
    if (rest.rfind("zeta ", 0) == 0) {
        zeta = true;
        rest = rest.substr(5);
    }
    if (rest.rfind("x_{", 0) != 0)
        throw std::invalid_argument("parse_class_name: bad family name " + name);
    size_t comma = rest.find(','), close = rest.find('}');
    int sb = std::stoi(rest.substr(3, comma - 3));
    int d = std::stoi(rest.substr(comma + 1, close - comma - 1));
    s = sb + (zeta ? 1 : 0);
    stem = d - s + 6 * v2pow;
}

ChartPage parse_chart_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ChartPage page;
    page.page = j.at("page").get<std::string>();
    page.period = j.at("period").get<int>();
    for (const auto& jc : j.at("classes"))
        page.classes.push_back({jc.at("s").get<int>(), jc.at("stem").get<int>(),
                                jc.at("name").get<std::string>(), jc.at("zeta").get<bool>()});
    for (const auto& jd : j.at("differentials")) {
        ChartDifferential d;
        d.r = jd.at("r").get<int>();
        d.source = jd.at("source").get<std::string>();
        d.target = jd.at("target").get<std::string>();
        d.status = jd.at("status").get<std::string>();
        d.reason = jd.at("reason").get<std::string>();
        parse_class_name(d.source, d.src_s, d.src_stem);
        parse_class_name(d.target, d.tgt_s, d.tgt_stem);
        page.differentials.push_back(d);
    }
    for (const auto& je : j.at("extensions"))
        page.extensions.push_back({je.at("source").get<std::string>(),
                                   je.at("target").get<std::string>(),
                                   je.at("status").get<std::string>(),
                                   je.at("reason").get<std::string>()});
    return page;
}

std::string emit_chart_ascii(const ChartPage& page, int stem_lo, int stem_hi) {
    const int smax = 4;
    std::string out = page.page + " (stems " + std::to_string(stem_lo) + ".." +
                      std::to_string(stem_hi) + ", o = zeta multiple)\n";
    for (int s = smax; s >= 0; --s) {
        std::string row = "s=" + std::to_string(s) + " |";
        for (int st = stem_lo; st <= stem_hi; ++st) {
            std::string cell;
            for (const auto& c : page.classes) {
                if (c.s != s)
                    continue;
                if (((st - c.stem) % 6 + 6) % 6 == 0)
                    cell += c.zeta ? 'o' : '*';
            }
            std::sort(cell.begin(), cell.end());
            while (cell.size() < 2)
                cell += ' ';
            row += cell + " ";
        }
        out += row + "\n";
    }
    out += "     ";
    for (int st = stem_lo; st <= stem_hi; ++st) {
        std::string lab = std::to_string(st);
        while (lab.size() < 3)
            lab = " " + lab;
        out += lab;
    }
    out += "\n";
    return out;
}

std::string emit_chart_svg(const ChartPage& page, int stem_lo, int stem_hi) {
    const int cell = 28, smax = 4, pad = 30;
    int w = (stem_hi - stem_lo + 1) * cell + 2 * pad;
    int h = (smax + 1) * cell + 2 * pad;
    auto px = [&](int stem) { return pad + (stem - stem_lo) * cell + cell / 2; };
    auto py = [&](int s) { return pad + (smax - s) * cell + cell / 2; };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(w) + "\" height=\"" + std::to_string(h) + "\">\n";
    svg += "<!-- " + page.page + " -->\n";
    for (int s = 0; s <= smax; ++s)
        svg += "<line x1=\"" + std::to_string(pad) + "\" y1=\"" + std::to_string(py(s)) +
               "\" x2=\"" + std::to_string(w - pad) + "\" y2=\"" + std::to_string(py(s)) +
               "\" stroke=\"#eeeeee\"/>\n";
    /* classes: filled dots, zeta multiples as open dots, offset in-cell */
    for (const auto& c : page.classes)
        for (int st = stem_lo; st <= stem_hi; ++st) {
            if (((st - c.stem) % 6 + 6) % 6 != 0)
                continue;
            int dx = c.zeta ? 6 : -2;
            svg += "<circle cx=\"" + std::to_string(px(st) + dx) + "\" cy=\"" +
                   std::to_string(py(c.s)) + "\" r=\"4\" fill=\"" +
                   (c.zeta ? std::string("white") : std::string("black")) +
                   "\" stroke=\"black\"/>\n";
        }
    /* differentials that are in play: dashed arrows on every translate */
    for (const auto& d : page.differentials) {
        if (d.status == "ruled_out")
            continue;
        for (int st = stem_lo; st <= stem_hi; ++st) {
            if (((st - d.src_stem) % 6 + 6) % 6 != 0)
                continue;
            int tst = st - 1;
            if (tst < stem_lo || tst > stem_hi)
                continue;
            svg += "<line x1=\"" + std::to_string(px(st)) + "\" y1=\"" +
                   std::to_string(py(d.src_s)) + "\" x2=\"" + std::to_string(px(tst)) +
                   "\" y2=\"" + std::to_string(py(d.tgt_s)) +
                   "\" stroke=\"black\" stroke-dasharray=\"5,3\" class=\"d3\"/>\n";
        }
    }
    /* open extensions: dotted verticals on the canonical representative */
    for (const auto& e : page.extensions) {
        if (e.status != "open")
            continue;
        svg += "<!-- open: 2 . " + e.source + " = " + e.target + " -->\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace mstab
