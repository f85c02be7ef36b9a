// Command-line front end: compute bases and tables, run verification suites,
// render matches, emit JSON/CSV.  Exit codes: 0 success, 1 verification
// failure, 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qtl/bases.hpp"
#include "qtl/checks.hpp"
#include "qtl/fqoracle.hpp"
#include "qtl/intertwiners.hpp"
#include "qtl/matchings.hpp"
#include "qtl/strata.hpp"

using json = nlohmann::ordered_json;
using namespace qtl;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;

int env_cap() {
    const char* v = std::getenv("QTL_CAP");
    if (!v) return 5;
    try {
        return std::stoi(v);
    } catch (...) {
        return 5;
    }
}

Comp parse_comp(const std::string& s) {
    Comp out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty entry in composition");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if ((c >= '0' && c <= '9') || c == '-') {
            cur += c;
        } else {
            throw CLI::ValidationError("bad composition character");
        }
    }
    if (out.empty()) throw CLI::ValidationError("empty composition");
    return out;
}

json comp_json(const Comp& c) { return json(c); }

json label_json(const StratumLabel& l, const RatQ& value) {
    json j;
    j["w"] = comp_json(l.w);
    j["r"] = comp_json(l.r);
    j["n"] = comp_json(l.n);
    j["k_factor"] = k_factor(l).str();
    j["value"] = value.str();
    return j;
}

std::string csv_quote(const json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>(), out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    }
    return v.dump();
}

// Flattens an array of flat-ish objects into CSV; nested values are quoted
// JSON strings.
std::string to_csv(const json& rows) {
    std::vector<std::string> header;
    for (auto& row : rows)
        for (auto& [key, value] : row.items())
            if (std::find(header.begin(), header.end(), key) == header.end())
                header.push_back(key);
    std::string text;
    for (size_t i = 0; i < header.size(); ++i) text += (i ? "," : "") + header[i];
    text += "\n";
    for (auto& row : rows) {
        for (size_t i = 0; i < header.size(); ++i) {
            if (i) text += ",";
            if (row.contains(header[i])) {
                const json& v = row[header[i]];
                text += (v.is_string() || v.is_structured()) ? csv_quote(v.is_string() ? v : json(v.dump()))
                                                             : v.dump();
            }
        }
        text += "\n";
    }
    return text;
}

void emit(const json& j, const std::string& out_path, const std::string& format) {
    std::string text;
    if (format == "json") {
        text = j.dump(2) + "\n";
    } else if (format == "csv") {
        for (auto& key : {"elements", "rows", "cases", "labels", "blocks"}) {
            if (j.contains(key)) {
                text = to_csv(j[key]);
                break;
            }
        }
    } else if (format == "text") {
        text = j.dump(2) + "\n";
    } else {
        throw CLI::ValidationError("--format must be json, csv or text");
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << text;
    }
}

struct BasisOptions {
    std::string d, which = "e", format = "json", out;
};

int cmd_basis(const BasisOptions& opt) {
    Comp shape = parse_comp(opt.d);
    for (int x : shape)
        if (x < 0) throw CLI::ValidationError("shape entries must be nonnegative");
    json j;
    j["command"] = "basis";
    j["shape"] = comp_json(shape);
    j["basis"] = opt.which;
    json elems = json::array();
    auto emit_family = [&](const std::vector<std::pair<Comp, InvariantFunction>>& family,
                           const std::vector<BasisElementReport>& reports) {
        for (size_t i = 0; i < family.size(); ++i) {
            json e;
            e["index"] = comp_json(family[i].first);
            json sup = json::array();
            for (auto& [label, value] : family[i].second.values)
                sup.push_back(label_json(label, value));
            e["support"] = sup;
            if (!reports.empty()) {
                e["dense_value"] = reports[i].dense_value.str();
                e["certified"] = reports[i].certified;
                if (!reports[i].certified) e["note"] = reports[i].note;
            }
            elems.push_back(e);
        }
    };
    if (opt.which == "e") {
        emit_family(elementary_basis(shape), {});
    } else if (opt.which == "c") {
        CanonicalCache cache;
        emit_family(canonical_extension_basis(shape, cache), certify_canonical(shape, cache));
    } else if (opt.which == "s") {
        emit_family(decomposition_basis(shape), certify_decomposition(shape));
    } else {
        throw CLI::ValidationError("--which must be e, c or s");
    }
    j["elements"] = elems;
    emit(j, opt.out, opt.format);
    return 0;
}

struct VerifyOptions {
    std::string suite = "all", d, format = "json", out;
    std::vector<int> fields{4, 9};
    int max_total = 4;
};

bool suite_selected(const std::string& sel, const std::string& name, bool oracle) {
    if (sel == "all") return true;
    if (sel == "oracle") return oracle;
    if (sel == "symbolic") return !oracle;
    return sel == name;
}

int cmd_verify(const VerifyOptions& opt) {
    int cap = env_cap();
    if (opt.max_total > cap) {
        std::cerr << "verify: --max-total " << opt.max_total << " exceeds the enumeration cap "
                  << cap << " (set QTL_CAP to raise it)\n";
        return kExitConfig;
    }
    std::vector<Comp> shapes;
    if (!opt.d.empty()) {
        shapes.push_back(parse_comp(opt.d));
        if (total(shapes.back()) > cap) {
            std::cerr << "verify: |d| exceeds the enumeration cap\n";
            return kExitConfig;
        }
    } else {
        for (int n = 1; n <= opt.max_total; ++n)
            for (auto& s : shapes_of_total(n)) shapes.push_back(s);
    }
    json cases = json::array();
    bool all_pass = true;
    auto push_sym = [&](const std::vector<CheckCase>& cs) {
        for (auto& c : cs) {
            json e;
            e["suite"] = c.suite;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (!c.detail.empty()) e["detail"] = c.detail;
            cases.push_back(e);
            all_pass = all_pass && c.pass;
        }
    };
    auto push_oracle = [&](const std::vector<OracleCase>& cs) {
        for (auto& c : cs) {
            json e;
            e["suite"] = c.suite;
            e["shape"] = comp_json(c.shape);
            e["field"] = c.field;
            e["name"] = c.name;
            e["expected"] = c.expected;
            e["actual"] = c.actual;
            e["pass"] = c.pass;
            cases.push_back(e);
            all_pass = all_pass && c.pass;
        }
    };

    const std::string& sel = opt.suite;
    if (suite_selected(sel, "relations", false)) {
        push_sym(check_relations_irrep(opt.max_total + 3));
        for (auto& s : shapes)
            if (s.size() <= 3) push_sym(check_relations_tensor(s));
        push_sym(check_quiver_matrices(opt.max_total + 2));
    }
    if (suite_selected(sel, "slice_isom", false))
        for (auto& s : shapes) push_sym(check_slice_isomorphism(s));
    if (suite_selected(sel, "cell_q1", false))
        for (auto& s : shapes) push_sym(check_cell_count_q1(s));
    if (suite_selected(sel, "canonical", false)) {
        CanonicalCache cache;
        for (auto& s : shapes) {
            push_sym(check_canonical_table(s));
            push_sym(check_canonical_certification(s, cache));
        }
    }
    if (suite_selected(sel, "decomposition", false))
        for (auto& s : shapes) push_sym(check_decomposition(s));
    if (suite_selected(sel, "intertwiner", false)) {
        CanonicalCache cache;
        for (auto& s : shapes) {
            push_sym(check_intertwiner_diagonal(s));
            push_sym(check_omega(s, cache));
            push_sym(check_intertwiner_commute(s));
        }
    }
    if (suite_selected(sel, "xi", false)) {
        CanonicalCache cache;
        for (auto& s : shapes) push_sym(check_xi(s, cache));
    }

    for (int fieldsize : opt.fields) {
        int p = fieldsize == 4 ? 2 : fieldsize == 9 ? 3 : fieldsize == 25 ? 5 : 0;
        if (p == 0) {
            std::cerr << "verify: field must be 4, 9 or 25\n";
            return kExitConfig;
        }
        Fq F(p);
        if (suite_selected(sel, "chi", true)) push_oracle(suite_chi_projective(F, 3));
        for (auto& s : shapes) {
            if (suite_selected(sel, "flags", true)) push_oracle(suite_lemma_flags(F, s));
            if (suite_selected(sel, "fibers", true) && s.size() == 1)
                push_oracle(suite_qrep_fibers(F, s[0]));
            if (suite_selected(sel, "strata", true)) push_oracle(suite_stratum_counts(F, s, cap));
            if (suite_selected(sel, "realizability", true))
                push_oracle(suite_realizability(F, s, cap));
            if (suite_selected(sel, "flagcounts", true)) push_oracle(suite_flag_counts(F, s, cap));
            if (suite_selected(sel, "matchconstants", true))
                push_oracle(suite_match_constants(F, s, cap));
            if (suite_selected(sel, "density", true)) push_oracle(suite_density_degrees(F, s, cap));
        }
    }

    json j;
    j["command"] = "verify";
    j["suite"] = sel;
    j["cases"] = cases;
    j["pass"] = all_pass;
    emit(j, opt.out, opt.format);
    return all_pass ? 0 : kExitVerifyFail;
}

struct RenderOptions {
    std::string d, a, out;
};

int cmd_render(const RenderOptions& opt) {
    Comp shape = parse_comp(opt.d), a = parse_comp(opt.a);
    if (a.size() != shape.size() || !nonnegative(a) || !leq_componentwise(a, shape))
        throw CLI::ValidationError("--a must satisfy 0 <= a_i <= d_i");
    std::string text = render_match(oriented_match(shape, a));
    if (opt.out.empty())
        std::cout << text;
    else
        std::ofstream(opt.out, std::ios::binary) << text;
    return 0;
}

struct ShapeOptions {
    std::string d, format = "json", out;
};

int cmd_intertwiners(const ShapeOptions& opt) {
    Comp shape = parse_comp(opt.d);
    CanonicalCache cache;
    json rows = json::array();
    for (auto& b : enumerate_lcm(shape)) {
        json row;
        json arcs = json::array();
        for (auto& [p, q] : b.arcs) arcs.push_back(json::array({p, q}));
        auto [l, m] = curve_profile(b);
        row["arcs"] = arcs;
        row["mu"] = b.unmatched_count();
        row["l"] = comp_json(l);
        row["m"] = comp_json(m);
        row["c_b"] = flag_constant(b).str();
        row["c_b_at_1"] = flag_constant_q1(b).str();
        json omegas = json::array();
        for (auto& w : all_indices(shape)) {
            RatQ omega = omega_closed(shape, b, w, cache);
            if (omega.is_zero()) continue;
            json o;
            o["w"] = comp_json(w);
            o["value"] = omega.str();
            omegas.push_back(o);
        }
        row["omega"] = omegas;
        rows.push_back(row);
    }
    json j;
    j["command"] = "intertwiners";
    j["shape"] = comp_json(shape);
    j["rows"] = rows;
    emit(j, opt.out, opt.format);
    return 0;
}

int cmd_kappa(const ShapeOptions& opt) {
    Comp shape = parse_comp(opt.d);
    CanonicalCache cache;
    const CanonicalTable& t = cache.get(shape);
    json blocks = json::array();
    for (int s = 0; s <= total(shape); ++s) {
        json block;
        block["total"] = s;
        json rows = json::array();
        for (auto& w : indices_of_total(shape, s)) {
            json row;
            row["w"] = comp_json(w);
            json entries = json::array();
            for (auto& [a, x] : t.expansion.at(w).c) {
                json e;
                e["a"] = comp_json(a);
                e["value"] = x.str();
                entries.push_back(e);
            }
            row["entries"] = entries;
            rows.push_back(row);
        }
        block["rows"] = rows;
        blocks.push_back(block);
    }
    json j;
    j["command"] = "kappa";
    j["shape"] = comp_json(shape);
    j["positive_certified"] = t.positive_certified;
    j["blocks"] = blocks;
    emit(j, opt.out, opt.format);
    return 0;
}

int cmd_strata(const ShapeOptions& opt) {
    Comp shape = parse_comp(opt.d);
    json rows = json::array();
    for (auto& label : realizable_labels(shape)) {
        json row;
        row["w"] = comp_json(label.w);
        row["r"] = comp_json(label.r);
        row["n"] = comp_json(label.n);
        row["k_factor"] = k_factor(label).str();
        row["dim"] = stratum_dim(shape, label);
        row["count_poly"] = stratum_count_poly(shape, label).str();
        row["flag_count"] = flag_count(shape, label).str();
        rows.push_back(row);
    }
    json j;
    j["command"] = "strata";
    j["shape"] = comp_json(shape);
    j["labels"] = rows;
    emit(j, opt.out, opt.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic toolkit for tensor products of U_q(sl2) modules realized as "
                 "invariant functions on flagged nilpotent configurations"};
    app.require_subcommand(1);

    BasisOptions bopt;
    auto* basis = app.add_subcommand("basis", "emit a basis table with certification data");
    basis->add_option("--d", bopt.d, "shape, comma separated")->required();
    basis->add_option("--which", bopt.which, "e | c | s");
    basis->add_option("--format", bopt.format, "json | csv | text");
    basis->add_option("--out", bopt.out, "output path (default stdout)");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", vopt.suite, "all | symbolic | oracle | <suite name>");
    verify->add_option("--d", vopt.d, "restrict to one shape");
    verify->add_option("--field", vopt.fields, "field sizes (4, 9, 25)");
    verify->add_option("--max-total", vopt.max_total, "sweep shapes with |d| up to this");
    verify->add_option("--format", vopt.format, "json | csv | text");
    verify->add_option("--out", vopt.out, "output path");

    RenderOptions ropt;
    auto* render = app.add_subcommand("render", "ASCII diagram of the oriented match M(d, a)");
    render->add_option("--d", ropt.d)->required();
    render->add_option("--a", ropt.a)->required();
    render->add_option("--out", ropt.out);

    ShapeOptions iopt, kopt, sopt;
    auto* inter = app.add_subcommand("intertwiners", "per-match constants and omega rows");
    inter->add_option("--d", iopt.d)->required();
    inter->add_option("--format", iopt.format);
    inter->add_option("--out", iopt.out);
    auto* kappa = app.add_subcommand("kappa", "canonical change-of-basis tables");
    kappa->add_option("--d", kopt.d)->required();
    kappa->add_option("--format", kopt.format);
    kappa->add_option("--out", kopt.out);
    auto* strata = app.add_subcommand("strata", "stratum table with dimensions and counts");
    strata->add_option("--d", sopt.d)->required();
    strata->add_option("--format", sopt.format);
    strata->add_option("--out", sopt.out);

    try {
        app.parse(argc, argv);
        if (basis->parsed()) return cmd_basis(bopt);
        if (verify->parsed()) return cmd_verify(vopt);
        if (render->parsed()) return cmd_render(ropt);
        if (inter->parsed()) return cmd_intertwiners(iopt);
        if (kappa->parsed()) return cmd_kappa(kopt);
        if (strata->parsed()) return cmd_strata(sopt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
