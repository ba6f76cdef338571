#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etri/analysis.hpp"
#include "etri/atlas.hpp"
#include "etri/catalog.hpp"
#include "etri/enumerator.hpp"
#include "etri/export.hpp"
#include "etri/formulas.hpp"
#include "etri/patch_builder.hpp"
#include "etri/rewrites.hpp"
#include "etri/surface.hpp"

namespace py = pybind11;
using namespace etri;

namespace {

py::dict signature_dict(const Signature& s) {
    py::dict d;
    d["closed"] = s.closed;
    d["a3"] = s.a3;
    d["a4"] = s.a4;
    d["a5"] = s.a5;
    d["a6"] = s.a6;
    d["b"] = s.b;
    d["beta4"] = s.beta4;
    d["beta5"] = s.beta5;
    d["notation"] = s.notation();
    return d;
}

py::dict params_dict(const ParamVector& p) {
    py::dict d;
    d["alpha"] = p.alpha;
    d["f1"] = p.f1;
    d["f2"] = p.f2;
    d["f3"] = p.f3;
    d["euler"] = p.euler;
    return d;
}

std::string sig_text(const Surface& s) { return classify(s).notation(); }

}  // namespace

PYBIND11_MODULE(etri, m) {
    m.doc() = "Elliptic triangulations of spheres and discs";

    static py::exception<Error> exc(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = exc;
            py::object inst = err(e.what());
            inst.attr("code") = err_name(e.code());
            PyErr_SetObject(exc.ptr(), inst.ptr());
        }
    });

    py::class_<Surface>(m, "Surface")
        .def_static("from_triangles", [](const std::vector<Tri>& t, std::optional<std::vector<int>> b) {
            return Surface::from_triangles(t, b);
        }, py::arg("triangles"), py::arg("boundary") = py::none())
        .def_property_readonly("closed", &Surface::is_closed)
        .def_property_readonly("num_vertices", &Surface::num_vertices)
        .def_property_readonly("num_edges", &Surface::num_edges)
        .def_property_readonly("num_triangles", &Surface::num_triangles)
        .def_property_readonly("triangles", &Surface::triangles)
        .def_property_readonly("boundary", &Surface::boundary)
        .def("degree", &Surface::degree)
        .def("neighbors", &Surface::neighbors)
        .def("mirrored", &Surface::mirrored)
        .def("__repr__", [](const Surface& s) {
            return "<Surface " + std::to_string(s.num_vertices()) + " points, " +
                   std::to_string(s.num_triangles()) + " triangles>";
        });

    m.def("parse", &parse_face_list, py::arg("text"));
    m.def("serialize", [](const Surface& s) { return serialize(s); });
    m.def("validate", [](const Surface& s) { return validate(s).ok(); });
    m.def("validate_report", [](const Surface& s) { return validate(s).text(); });
    m.def("parameters", [](const Surface& s) { return params_dict(parameters(s)); });
    m.def("classify", [](const Surface& s) { return signature_dict(classify(s)); });
    m.def("signature", &sig_text);
    m.def("is_elliptic", &is_elliptic);
    m.def("canonical_code", [](const Surface& s, bool refl) { return canonical_code(s, refl).hex(); },
          py::arg("surface"), py::arg("identify_reflections") = true);
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"), py::arg("identify_reflections") = true);
    m.def("export", &export_surface, py::arg("surface"), py::arg("format"));

    m.def("catalog_get", [](const std::string& id) { return catalog_get(id).surface(); });
    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto* e : catalog_all()) ids.push_back(e->id);
        return ids;
    });

    m.def("tessellation", &tessellation);
    m.def("build_030", [](int h, int k, int l) { return build_030(h, k, l).patch; }, py::arg("h"),
          py::arg("k") = 0, py::arg("l") = 0);
    m.def("build_200", [](int k, int r) { return build_200(k, r).surface(); });
    m.def("add_belts", &add_belts, py::arg("patch"), py::arg("m") = 1);
    m.def("generic_enlarge", &generic_enlarge);
    m.def("family_patch", &family_patch, py::arg("family"), py::arg("k"), py::arg("m") = 0);
    m.def("truncate_type", [](int type, const std::map<std::string, int>& p) { return truncate_type(type, p).patch; });

    m.def("N_030", [](long h, long k, long l) { return N_030(h, k, l).N; }, py::arg("h"), py::arg("k") = 0,
          py::arg("l") = 0);
    m.def("N_type", [](int type, const std::map<std::string, long>& p) { return N_type(type, p).N; });
    m.def("family_signature",
          [](char f, long k, long m) { return signature_dict(family_signature(f, k, m)); }, py::arg("family"),
          py::arg("k"), py::arg("m") = 0);

    m.def("rewrite_kinds", [] {
        std::vector<std::string> out;
        for (auto k : all_kinds()) out.push_back(kind_name(k));
        return out;
    });
    m.def("find_sites", [](const Surface& t, const std::string& kind) {
        std::vector<std::vector<int>> out;
        for (const auto& s : find_sites(t, kind_from_name(kind))) out.push_back(s.vertices);
        return out;
    });
    m.def("apply_rewrite", [](const Surface& t, const std::string& kind, const std::vector<int>& vertices) {
        auto sites = find_sites_on(t, kind_from_name(kind), {vertices.begin(), vertices.end()});
        for (const auto& s : sites)
            if (s.vertices == vertices) return apply_rewrite(t, s);
        if (sites.empty()) throw Error(Err::StaleSite, "no " + kind + " site on these points");
        return apply_rewrite(t, sites[0]);
    });
    m.def("face_fullering", &face_fullering);
    m.def("edge_fullering", &edge_fullering);
    m.def("glue_strip", [](const Surface& a, const Surface& b, int m) { return glue_strip(a, b, m).surface; },
          py::arg("p1"), py::arg("p2"), py::arg("belts") = 0);
    m.def("glue_method", [](const Surface& a, const Surface& b, const std::string& method) {
        GlueMethod g = method == "A" ? GlueMethod::A : method == "B" ? GlueMethod::B : GlueMethod::C;
        if (method != "A" && method != "B" && method != "C") throw Error(Err::Domain, "method is A, B or C");
        return glue_method(a, b, g).surface;
    });
    m.def("connected_sum", &connected_sum);

    m.def("enumerate_closed", [](int n, bool elliptic) { return enumerate_closed(n, elliptic).objects; },
          py::arg("n"), py::arg("elliptic") = false);
    m.def("check_existence", [](int a3, int a4, int a5, long n6, int cap) {
        Existence e = check_existence(a3, a4, a5, n6, cap);
        py::dict d;
        d["status"] = status_name(e.status);
        d["provenance"] = e.provenance;
        d["witness"] = e.witness ? py::cast(*e.witness) : py::none();
        return d;
    }, py::arg("a3"), py::arg("a4"), py::arg("a5"), py::arg("n6"), py::arg("enum_cap") = 9);
    m.def("atlas_text", [](long max_n6, int cap, int workers) { return atlas_text(atlas(max_n6, cap, workers)); },
          py::arg("max_n6") = 20, py::arg("enum_cap") = 9, py::arg("workers") = 1);
}
