// etri: command line front end over the library.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "etri/analysis.hpp"
#include "etri/atlas.hpp"
#include "etri/catalog.hpp"
#include "etri/enumerator.hpp"
#include "etri/export.hpp"
#include "etri/formulas.hpp"
#include "etri/patch_builder.hpp"
#include "etri/rewrites.hpp"

using namespace etri;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUnknownExit = 4;

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// file path, "-" for stdin, or catalog:<id>
Surface load(const std::string& src) {
    if (src.rfind("catalog:", 0) == 0) return catalog_get(src.substr(8)).surface();
    if (src == "-") return parse_face_list(read_all(std::cin));
    std::ifstream f(src);
    if (!f) throw Error(Err::Domain, "cannot open " + src);
    return parse_face_list(read_all(f));
}

std::string load_text(const std::string& src) {
    if (src.rfind("catalog:", 0) == 0) return serialize(catalog_get(src.substr(8)).surface());
    if (src == "-") return read_all(std::cin);
    std::ifstream f(src);
    if (!f) throw Error(Err::Domain, "cannot open " + src);
    return read_all(f);
}

int vertex_arg(const std::string& tok) {
    if (!tok.empty() && std::all_of(tok.begin(), tok.end(), ::isdigit) && tok.size() > 1) return std::stoi(tok);
    if (tok.size() == 1) {
        int v = vertex_from_char(tok[0]);
        if (v > 0) return v;
    }
    throw Error(Err::MalformedToken, "bad vertex '" + tok + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string t;
    while (std::getline(in, t, sep))
        if (!t.empty()) out.push_back(t);
    return out;
}

std::vector<int> vertex_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) out.push_back(vertex_arg(t));
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) out.push_back(std::stoi(t));
    return out;
}

json signature_json(const Signature& g) {
    json j;
    j["closed"] = g.closed;
    j["a3"] = g.a3;
    j["a4"] = g.a4;
    j["a5"] = g.a5;
    j["a6"] = g.a6;
    if (!g.closed) {
        j["b"] = g.b;
        j["beta4"] = g.beta4;
        j["beta5"] = g.beta5;
        j["boundary_degrees"] = g.boundary_degrees;
    }
    j["notation"] = g.notation();
    return j;
}

struct Emit {
    std::string format = "text";
    bool is_json() const { return format == "json"; }
    // a surface result: face list, or json with its signature
    void surface(const Surface& s, const std::vector<std::pair<std::string, std::string>>& headers = {}) const {
        if (is_json()) {
            json j = json::parse(to_json_text(s));
            for (const auto& [k, v] : headers) j[k] = v;
            std::cout << j.dump(2) << '\n';
        } else {
            std::vector<std::pair<std::string, std::string>> h = headers;
            if (is_elliptic(s)) h.push_back({"signature", classify(s).notation()});
            std::cout << serialize(s, h);
        }
    }
};

void add_format(CLI::App* app, Emit& e) {
    app->add_option("--format", e.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic sphere and disc triangulations"};
    app.require_subcommand(1);
    Emit emit;
    int code = 0;

    // validate
    std::string v_in;
    auto* validate_cmd = app.add_subcommand("validate", "check a face list");
    validate_cmd->add_option("input", v_in, "file, - or catalog:<id>")->required();
    add_format(validate_cmd, emit);
    validate_cmd->callback([&] {
        FaceList fl = parse_face_list_raw(load_text(v_in));
        ValidationReport r = validate_triangles(fl.triangles, fl.boundary);
        if (emit.is_json()) {
            json j;
            j["ok"] = r.ok();
            for (const auto& it : r.items) j["checks"].push_back({{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << r.text() << (r.ok() ? "valid\n" : "invalid\n");
        }
        if (!r.ok()) code = 2;
    });

    // analyze
    std::string a_in;
    auto* analyze_cmd = app.add_subcommand("analyze", "degrees, signature and boundary profile");
    analyze_cmd->add_option("input", a_in)->required();
    add_format(analyze_cmd, emit);
    analyze_cmd->callback([&] {
        Surface s = load(a_in);
        ParamVector p = parameters(s);
        json j;
        j["f1"] = p.f1;
        j["f2"] = p.f2;
        j["f3"] = p.f3;
        j["euler"] = p.euler;
        json al;
        for (const auto& [d, c] : p.alpha) al[std::to_string(d)] = c;
        j["alpha"] = al;
        j["elliptic"] = is_elliptic(s);
        if (is_elliptic(s)) j["signature"] = signature_json(classify(s));
        if (emit.is_json()) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "f1=" << p.f1 << " f2=" << p.f2 << " f3=" << p.f3 << " euler=" << p.euler << '\n';
            for (const auto& [d, c] : p.alpha) std::cout << "alpha" << d << '=' << c << '\n';
            if (is_elliptic(s))
                std::cout << classify(s).notation() << '\n';
            else
                std::cout << "not elliptic\n";
        }
    });

    // build
    auto* build_cmd = app.add_subcommand("build", "patch constructions");
    build_cmd->require_subcommand(1);
    add_format(build_cmd, emit);
    int bh = 0, bk = 0, bl = 0, br = 0, bm = 0, btype = 0;
    std::string bname, bparams;
    auto* b030 = build_cmd->add_subcommand("p030", "(0,3,0) patch P_h, [0,0,k] or [0,l,k]");
    b030->set_help_flag("--help", "Print this help message and exit");
    b030->add_option("--h", bh)->required();
    b030->add_option("--k", bk);
    b030->add_option("--l", bl);
    b030->callback([&] {
        Build030 b = build_030(bh, bk, bl);
        std::string parts;
        for (int x : b.parts) parts += (parts.empty() ? "" : ",") + std::to_string(x);
        emit.surface(b.patch, {{"beta4", std::to_string(b.beta4)}, {"parts", parts}});
    });
    auto* b200 = build_cmd->add_subcommand("p200", "(2,0,0) path with r belts");
    b200->add_option("--k", bk)->required();
    b200->add_option("--r", br)->required();
    b200->callback([&] {
        Piece p = build_200(bk, br);
        if (p.tris.empty()) {
            std::ostringstream rim;
            for (size_t i = 0; i < p.rim.size(); ++i) rim << (i ? " " : "") << p.rim[i];
            if (emit.is_json())
                std::cout << json{{"kind", "path"}, {"vertices", p.n}, {"rim", p.rim}}.dump(2) << '\n';
            else
                std::cout << "# path with no triangles\nrim: " << rim.str() << '\n';
        } else {
            emit.surface(p.surface());
        }
    });
    auto* btrunc = build_cmd->add_subcommand("trunc", "truncated patch of type 1..7");
    btrunc->add_option("--type", btype)->required();
    btrunc->add_option("--params", bparams, "name=value,...")->required();
    btrunc->callback([&] {
        std::map<std::string, int> params;
        for (const auto& kv : split(bparams, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw Error(Err::MalformedToken, "expected name=value: " + kv);
            params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
        }
        TruncatedPatch t = truncate_type(btype, params);
        std::vector<std::pair<std::string, std::string>> h;
        for (const auto& [k, v] : t.measured) h.push_back({k, std::to_string(v)});
        emit.surface(t.patch, h);
    });
    auto* bfam = build_cmd->add_subcommand("family", "(1,1,1) family A..P");
    bfam->add_option("--name", bname)->required();
    bfam->add_option("--k", bk)->required();
    bfam->add_option("--m", bm);
    bfam->callback([&] {
        if (bname.size() != 1) throw Error(Err::Domain, "family name is one letter A..P");
        emit.surface(family_patch(bname[0], bk, bm));
    });

    // belt
    auto* belt_cmd = app.add_subcommand("belt", "add or peel belts");
    belt_cmd->require_subcommand(1);
    add_format(belt_cmd, emit);
    std::string belt_in;
    int belt_m = 1;
    auto* belt_add = belt_cmd->add_subcommand("add");
    belt_add->add_option("input", belt_in)->required();
    belt_add->add_option("--m", belt_m, "number of belts");
    belt_add->callback([&] { emit.surface(add_belts(load(belt_in), belt_m)); });
    auto* belt_peel = belt_cmd->add_subcommand("peel");
    belt_peel->add_option("input", belt_in)->required();
    belt_peel->callback([&] {
        PeelResult r = peel_belt(load(belt_in));
        if (r.patch) {
            emit.surface(*r.patch);
        } else {
            const char* shape = r.shape == PeelResult::Shape::Graph ? "graph" : r.shape == PeelResult::Shape::Points ? "points" : "empty";
            if (emit.is_json()) {
                std::cout << json{{"shape", shape}, {"vertices", r.vertices}, {"edges", r.edges}}.dump(2) << '\n';
            } else {
                std::cout << "core: " << shape << " with " << r.vertices.size() << " points and " << r.edges.size()
                          << " edges\n";
            }
        }
    });

    // corner
    auto* corner_cmd = app.add_subcommand("corner", "corner cutting");
    corner_cmd->require_subcommand(1);
    add_format(corner_cmd, emit);
    std::string corner_in, corner_at;
    auto* corner_cut = corner_cmd->add_subcommand("cut");
    corner_cut->add_option("input", corner_in)->required();
    corner_cut->add_option("--at", corner_at, "boundary point of degree 4")->required();
    corner_cut->callback([&] { emit.surface(cut_corner(load(corner_in), vertex_arg(corner_at))); });

    // formula
    auto* formula_cmd = app.add_subcommand("formula", "closed-form counts");
    add_format(formula_cmd, emit);
    std::string f_name, f_params;
    formula_cmd->add_option("--name", f_name, "030, 00k, trunc1..trunc7 or family")->required();
    formula_cmd->add_option("--params", f_params, "name=value,...");
    formula_cmd->callback([&] {
        std::map<std::string, long> p;
        std::string fam;
        for (const auto& kv : split(f_params, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw Error(Err::MalformedToken, "expected name=value: " + kv);
            if (kv.substr(0, eq) == "name")
                fam = kv.substr(eq + 1);
            else
                p[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
        }
        auto get = [&](const char* k) { return p.count(k) ? p[k] : 0L; };
        json j;
        if (f_name == "family") {
            if (fam.size() != 1) throw Error(Err::Domain, "family needs name=<A..P>");
            Signature g = family_signature(fam[0], get("k"), get("m"));
            j = signature_json(g);
        } else {
            FormulaResult r;
            if (f_name == "030")
                r = N_030(get("h"), get("k"), get("l"));
            else if (f_name == "00k")
                r.N = N_00k(get("h"), get("k"));
            else if (f_name.rfind("trunc", 0) == 0 && f_name.size() == 6)
                r = N_type(f_name[5] - '0', p);
            else
                throw Error(Err::Domain, "unknown formula " + f_name);
            j["N"] = r.N;
            for (const auto& [k, v] : r.derived) j["derived"][k] = v;
            for (const auto& [k, ok] : r.conditions) j["conditions"][k] = ok;
        }
        if (emit.is_json()) {
            std::cout << j.dump(2) << '\n';
        } else if (j.contains("notation")) {
            std::cout << j["notation"].get<std::string>() << '\n';
        } else {
            std::cout << "N=" << j["N"] << '\n';
            if (j.contains("derived"))
                for (auto& [k, v] : j["derived"].items()) std::cout << k << '=' << v << '\n';
            if (j.contains("conditions"))
                for (auto& [k, v] : j["conditions"].items()) std::cout << (v.get<bool>() ? "holds: " : "fails: ") << k << '\n';
        }
    });

    // rewrite
    auto* rewrite_cmd = app.add_subcommand("rewrite", "apply a local rewrite");
    add_format(rewrite_cmd, emit);
    std::string rw_in, rw_kind, rw_site;
    bool rw_auto = false, rw_list = false;
    int rw_stage = 0;
    rewrite_cmd->add_option("input", rw_in)->required();
    rewrite_cmd->add_option("--kind", rw_kind)->required();
    rewrite_cmd->add_option("--stage", rw_stage, "E3 stage 1..3 with --site");
    auto* site_opt = rewrite_cmd->add_option("--site", rw_site, "one vertex per role, in role order");
    auto* auto_opt = rewrite_cmd->add_flag("--auto", rw_auto, "first site found");
    auto* list_opt = rewrite_cmd->add_flag("--list", rw_list, "only list the sites");
    site_opt->excludes(auto_opt)->excludes(list_opt);
    auto_opt->excludes(list_opt);
    rewrite_cmd->callback([&] {
        Surface s = load(rw_in);
        RewriteKind kind = kind_from_name(rw_kind);
        auto sites = find_sites(s, kind);
        if (rw_list) {
            if (emit.is_json()) {
                json j = json::array();
                for (const auto& st : sites) j.push_back(st.text());
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& st : sites) std::cout << st.text() << '\n';
            }
            return;
        }
        RewriteSite site;
        if (rw_auto) {
            if (sites.empty()) throw Error(Err::StaleSite, std::string("no ") + kind_name(kind) + " site");
            site = sites.front();
        } else if (!rw_site.empty()) {
            auto vs = vertex_list(rw_site);
            bool found = false;
            for (const auto& st : sites)
                if (st.vertices == vs && (rw_stage == 0 || st.stage == rw_stage)) {
                    site = st;
                    found = true;
                    break;
                }
            if (!found) throw Error(Err::StaleSite, "the tuple is not a site of this kind");
        } else {
            throw Error(Err::Domain, "give --auto, --site or --list");
        }
        RewriteOutcome out = apply_rewrite_tracked(s, site);
        std::vector<std::pair<std::string, std::string>> h = {{"site", site.text()}};
        if (out.successor) h.push_back({"successor", out.successor->text()});
        emit.surface(out.surface, h);
    });

    // fuller
    auto* fuller_cmd = app.add_subcommand("fuller", "face or edge fullering");
    add_format(fuller_cmd, emit);
    std::string fu_in, fu_mode = "face";
    fuller_cmd->add_option("input", fu_in)->required();
    fuller_cmd->add_option("--mode", fu_mode)->check(CLI::IsMember({"face", "edge"}));
    fuller_cmd->callback([&] {
        Surface s = load(fu_in);
        emit.surface(fu_mode == "face" ? face_fullering(s) : edge_fullering(s));
    });

    // glue
    auto* glue_cmd = app.add_subcommand("glue", "glue two patches into a sphere");
    add_format(glue_cmd, emit);
    std::string g_p1, g_p2, g_method = "strip", g_align;
    int g_belts = 0;
    glue_cmd->add_option("p1", g_p1)->required();
    glue_cmd->add_option("p2", g_p2)->required();
    glue_cmd->add_option("--method", g_method)->check(CLI::IsMember({"strip", "A", "B", "C"}));
    glue_cmd->add_option("--belts", g_belts, "belts added to p1 before the strip");
    glue_cmd->add_option("--alignment", g_align, "offset[,r] where r marks a reflection");
    glue_cmd->callback([&] {
        std::optional<Alignment> al;
        if (!g_align.empty()) {
            auto parts = split(g_align, ',');
            al = Alignment{std::stoi(parts.at(0)), parts.size() > 1 && (parts[1] == "r" || parts[1] == "1")};
        }
        Surface p1 = load(g_p1), p2 = load(g_p2);
        GlueResult g;
        if (g_method == "strip")
            g = glue_strip(p1, p2, g_belts, al);
        else
            g = glue_method(p1, p2, g_method == "A" ? GlueMethod::A : g_method == "B" ? GlueMethod::B : GlueMethod::C, al);
        std::vector<std::pair<std::string, std::string>> h = {
            {"alignment", std::to_string(g.offset) + (g.reflected ? ",r" : "")}};
        if (!g.elliptic) {
            std::cerr << g.diagnostic << '\n';
            code = 3;
        }
        emit.surface(g.surface, h);
    });

    // consum
    auto* consum_cmd = app.add_subcommand("consum", "connected sum along two faces");
    add_format(consum_cmd, emit);
    std::string c_t1, c_t2, c_tri1, c_tri2;
    consum_cmd->add_option("--t1", c_t1)->required();
    consum_cmd->add_option("--tri1", c_tri1)->required();
    consum_cmd->add_option("--t2", c_t2)->required();
    consum_cmd->add_option("--tri2", c_tri2, "defaults to the first face of t2");
    consum_cmd->callback([&] {
        Surface t1 = load(c_t1), t2 = load(c_t2);
        auto a = vertex_list(c_tri1);
        if (a.size() != 3) throw Error(Err::InvalidTriangleChoice, "tri1 needs three points");
        Tri b = t2.triangles().front();
        if (!c_tri2.empty()) {
            auto bb = vertex_list(c_tri2);
            if (bb.size() != 3) throw Error(Err::InvalidTriangleChoice, "tri2 needs three points");
            b = {bb[0], bb[1], bb[2]};
        }
        emit.surface(connected_sum(t1, {a[0], a[1], a[2]}, t2, b));
    });

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "printed face lists");
    catalog_cmd->require_subcommand(1);
    add_format(catalog_cmd, emit);
    std::string cat_table, cat_id;
    bool cat_closed = false, cat_patches = false;
    auto* cat_list = catalog_cmd->add_subcommand("list");
    cat_list->add_option("--table", cat_table);
    cat_list->add_flag("--closed", cat_closed);
    cat_list->add_flag("--patches", cat_patches);
    cat_list->callback([&] {
        CatalogFilter f;
        if (!cat_table.empty()) f.table = cat_table;
        if (cat_closed) f.closed = true;
        if (cat_patches) f.closed = false;
        json j = json::array();
        for (const auto* e : catalog_all(f)) {
            if (emit.is_json())
                j.push_back({{"id", e->id}, {"closed", e->closed}, {"quarantined", !e->quarantine.empty()}});
            else
                std::cout << e->id << (e->quarantine.empty() ? "" : "  [quarantined]") << '\n';
        }
        if (emit.is_json()) std::cout << j.dump(2) << '\n';
    });
    auto* cat_show = catalog_cmd->add_subcommand("show");
    cat_show->add_option("id", cat_id)->required();
    cat_show->callback([&] {
        const CatalogEntry& e = catalog_get(cat_id);
        if (!e.quarantine.empty()) {
            std::cout << "# quarantined: " << e.quarantine << "\ntriangles: " << e.faces << '\n';
            return;
        }
        emit.surface(e.surface(), {{"id", e.id}});
    });
    auto* cat_check = catalog_cmd->add_subcommand("check", "golden suite");
    cat_check->callback([&] {
        int bad = 0;
        json j = json::array();
        for (const auto* e : catalog_all()) {
            GoldenResult r = check_entry(*e);
            if (!r.ok) ++bad;
            if (emit.is_json())
                j.push_back({{"id", r.id}, {"ok", r.ok}, {"quarantined", r.quarantined}, {"detail", r.detail}});
            else
                std::cout << (r.ok ? "ok   " : "FAIL ") << r.id << (r.quarantined ? " (quarantined)" : "")
                          << (r.detail.empty() ? "" : "  " + r.detail) << '\n';
        }
        if (emit.is_json()) std::cout << j.dump(2) << '\n';
        if (bad) code = 2;
    });

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "isomorph-free generation");
    enum_cmd->require_subcommand(1);
    add_format(enum_cmd, emit);
    int e_n = 0, e_b = 0, e_workers = 1, e_cap = 10, e_maxf1 = 0;
    bool e_elliptic = false;
    std::string e_type, e_archive;
    auto report = [&](const EnumerationResult& r) {
        if (!e_archive.empty()) {
            std::ofstream out(e_archive);
            for (size_t i = 0; i < r.objects.size(); ++i)
                out << serialize(r.objects[i], {{"index", std::to_string(i + 1)}, {"code", r.codes[i].hex()}}) << '\n';
        }
        if (emit.is_json()) {
            json j;
            j["n"] = r.n;
            j["count"] = r.codes.size();
            json tally;
            for (const auto& [k, v] : r.tally) tally[k] = v;
            j["tally"] = tally;
            j["codes"] = json::array();
            for (const auto& c : r.codes) j["codes"].push_back(c.hex());
            j["stats"] = {{"nodes", r.stats.nodes}, {"accepted", r.stats.accepted}, {"rejected", r.stats.rejected}};
            j["seconds"] = r.seconds;
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "count " << r.codes.size() << '\n';
            for (const auto& [k, v] : r.tally) std::cout << "  " << k << ' ' << v << '\n';
        }
    };
    auto* enum_closed = enum_cmd->add_subcommand("closed");
    enum_closed->add_option("--n", e_n)->required();
    enum_closed->add_flag("--elliptic", e_elliptic);
    enum_closed->add_option("--workers", e_workers);
    enum_closed->add_option("--cap", e_cap);
    enum_closed->add_option("--archive", e_archive, "write every object as a face list");
    enum_closed->callback([&] { report(enumerate_closed(e_n, e_elliptic, {e_cap, e_workers})); });
    auto* enum_patch = enum_cmd->add_subcommand("patches");
    enum_patch->add_option("--b", e_b)->required();
    enum_patch->add_option("--type", e_type, "a3,a4,a5");
    enum_patch->add_option("--max-f1", e_maxf1, "largest point count")->required();
    enum_patch->add_option("--cap", e_cap);
    enum_patch->add_option("--archive", e_archive);
    enum_patch->callback([&] {
        std::optional<std::array<int, 3>> type;
        if (!e_type.empty()) {
            auto t = int_list(e_type);
            if (t.size() != 3) throw Error(Err::MalformedToken, "type is a3,a4,a5");
            type = std::array<int, 3>{t[0], t[1], t[2]};
        }
        report(enumerate_patches(e_b, type, e_maxf1, {e_cap, 1}));
    });

    // exists
    auto* exists_cmd = app.add_subcommand("exists", "existence of an elliptic sphere triangulation");
    add_format(exists_cmd, emit);
    std::string x_type, x_witness;
    long x_n6 = 0;
    int x_cap = 9;
    exists_cmd->add_option("--type", x_type, "a3,a4,a5")->required();
    exists_cmd->add_option("--n6", x_n6)->required();
    exists_cmd->add_option("--enum-cap", x_cap);
    exists_cmd->add_option("--witness", x_witness, "write the witness face list here");
    exists_cmd->callback([&] {
        auto t = int_list(x_type);
        if (t.size() != 3) throw Error(Err::NotATypeTuple, "type is a3,a4,a5");
        Existence e = check_existence(t[0], t[1], t[2], x_n6, x_cap);
        if (e.witness && !x_witness.empty()) std::ofstream(x_witness) << serialize(*e.witness);
        if (emit.is_json()) {
            json j{{"type", t}, {"n6", x_n6}, {"status", status_name(e.status)}, {"provenance", e.provenance}};
            if (e.witness) j["witness"] = triangle_tokens(*e.witness);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << status_name(e.status) << "  " << e.provenance << '\n';
            if (e.witness) std::cout << "triangles: " << triangle_tokens(*e.witness) << '\n';
        }
        if (e.status == Existence::Status::Unknown) code = kUnknownExit;
    });

    // atlas
    auto* atlas_cmd = app.add_subcommand("atlas", "existence table");
    add_format(atlas_cmd, emit);
    long at_max = 20;
    int at_cap = 9, at_workers = 1;
    std::string at_dir;
    atlas_cmd->add_option("--max-n6", at_max);
    atlas_cmd->add_option("--enum-cap", at_cap);
    atlas_cmd->add_option("--workers", at_workers);
    atlas_cmd->add_option("--witness-dir", at_dir, "write each witness as <type>_<N>.tri");
    atlas_cmd->callback([&] {
        auto rows = atlas(at_max, at_cap, at_workers);
        if (!at_dir.empty()) {
            std::filesystem::create_directories(at_dir);
            for (const auto& r : rows)
                for (const auto& c : r.cells)
                    if (c.result.witness) {
                        std::ostringstream name;
                        name << r.type[0] << '-' << r.type[1] << '-' << r.type[2] << '_' << c.n6 << ".tri";
                        std::ofstream(std::filesystem::path(at_dir) / name.str())
                            << serialize(*c.result.witness, {{"provenance", c.result.provenance}});
                    }
        }
        if (emit.is_json()) {
            json j = json::array();
            for (const auto& r : rows) {
                json row{{"type", r.type}, {"cells", json::array()}};
                for (const auto& c : r.cells)
                    row["cells"].push_back({{"n6", c.n6},
                                            {"status", status_name(c.result.status)},
                                            {"printed", printed_name(c.printed)},
                                            {"provenance", c.result.provenance}});
                j.push_back(row);
            }
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "# E exists, N not (enumerated), C not (cited), ? unknown; columns N = 0.." << at_max << '\n';
            std::cout << atlas_text(rows);
            for (const auto& r : rows)
                for (const auto& c : r.cells) {
                    bool mine = c.result.status == Existence::Status::Exists;
                    bool printed = c.printed == PrintedStatus::Exists;
                    bool open = c.printed == PrintedStatus::Unknown || c.result.status == Existence::Status::Unknown;
                    if (mine != printed && !open)
                        std::cout << "# differs from the printed table at (" << r.type[0] << ',' << r.type[1] << ','
                                  << r.type[2] << ',' << c.n6 << "): " << status_name(c.result.status) << " ("
                                  << c.result.provenance << ")\n";
                }
        }
    });

    // export
    auto* export_cmd = app.add_subcommand("export", "write a surface as facelist, json or off");
    std::string ex_in, ex_as = "facelist";
    export_cmd->add_option("input", ex_in)->required();
    export_cmd->add_option("--as", ex_as, "facelist, json or off");
    export_cmd->callback([&] { std::cout << export_surface(load(ex_in), ex_as); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return err_exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return code;
}
