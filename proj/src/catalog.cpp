#include "etri/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace etri {

extern const char* const kCatalogText;

namespace {

std::vector<CatalogEntry> load() {
    std::vector<CatalogEntry> out;
    std::istringstream in(kCatalogText);
    std::string line;
    CatalogEntry cur;
    bool open = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "entry") {
            cur = CatalogEntry{};
            ls >> cur.id;
            cur.table = cur.id.substr(0, cur.id.find('/'));
            open = true;
        } else if (key == "sig") {
            ls >> cur.a3 >> cur.a4 >> cur.a5 >> cur.a6;
            cur.closed = !(ls >> cur.b);
            if (cur.closed) cur.b = 0;
        } else if (key == "boundary") {
            ls >> cur.boundary;
        } else if (key == "f3") {
            ls >> cur.f3;
        } else if (key == "beta4") {
            ls >> cur.beta4;
        } else if (key == "beta5") {
            ls >> cur.beta5;
        } else if (key == "quarantine") {
            std::getline(ls, cur.quarantine);
            cur.quarantine = cur.quarantine.substr(cur.quarantine.find_first_not_of(' '));
        } else if (key == "tri") {
            std::string rest;
            std::getline(ls, rest);
            cur.faces = rest.substr(rest.find_first_not_of(' '));
        } else if (key == "end" && open) {
            out.push_back(cur);
            open = false;
        }
    }
    return out;
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = load();
    return all;
}

std::string signature_part(const std::string& id) {
    auto p = id.find('/');
    return p == std::string::npos ? id : id.substr(p + 1);
}

}  // namespace

Surface CatalogEntry::surface() const {
    std::string doc = "triangles: " + faces + "\n";
    if (!boundary.empty()) doc += "boundary: " + boundary + "\n";
    return parse_face_list(doc);
}

std::string CatalogEntry::notation() const { return signature_part(id); }

const CatalogEntry& catalog_get(const std::string& id) {
    const auto& all = entries();
    for (const auto& e : all)
        if (e.id == id) return e;
    const CatalogEntry* hit = nullptr;
    int count = 0;
    std::string sig = signature_part(id);
    for (const auto& e : all)
        if (e.notation() == sig) {
            hit = &e;
            ++count;
        }
    if (count == 1) return *hit;
    throw Error(Err::UnknownEntry, id);
}

std::vector<const CatalogEntry*> catalog_all(const CatalogFilter& f) {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries()) {
        if (f.type && (e.a3 != (*f.type)[0] || e.a4 != (*f.type)[1] || e.a5 != (*f.type)[2])) continue;
        if (f.b && e.b != *f.b) continue;
        if (f.table && e.table != *f.table) continue;
        if (f.closed && e.closed != *f.closed) continue;
        out.push_back(&e);
    }
    return out;
}

std::vector<const CatalogEntry*> catalog_lookup(int a3, int a4, int a5, long a6, int b) {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries())
        if (e.a3 == a3 && e.a4 == a4 && e.a5 == a5 && e.a6 == a6 && e.b == b) out.push_back(&e);
    return out;
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const size_t n = a.size();
    if (n == 0) return true;
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<int> c = b;
        if (rev) std::reverse(c.begin(), c.end());
        for (size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) ok = a[i] == c[(i + s) % n];
            if (ok) return true;
        }
    }
    return false;
}

GoldenResult check_entry(const CatalogEntry& e) {
    GoldenResult r{e.id, true, false, ""};
    if (!e.quarantine.empty()) {
        r.quarantined = true;
        std::string want = e.quarantine.substr(0, e.quarantine.find(' '));
        try {
            e.surface();
            r.ok = false;
            r.detail = "quarantined entry now validates";
        } catch (const Error& ex) {
            r.ok = want == err_name(ex.code());
            r.detail = e.quarantine;
        }
        return r;
    }
    auto bad = [&](const std::string& msg) {
        if (r.ok) r.detail = msg;
        r.ok = false;
    };
    try {
        Surface s = e.surface();
        ValidationReport rep = validate(s);
        if (!rep.ok()) bad("validation: " + rep.text());
        Signature sig = classify(s);
        if (sig.closed != e.closed) bad("kind differs");
        if (sig.a3 != e.a3 || sig.a4 != e.a4 || sig.a5 != e.a5 || sig.a6 != e.a6 || sig.b != e.b)
            bad("signature " + sig.notation());
        if (e.f3 >= 0 && s.num_triangles() != e.f3) bad("f3 = " + std::to_string(s.num_triangles()));
        if (e.beta4 >= 0 && sig.beta4 != e.beta4) bad("beta4 = " + std::to_string(sig.beta4));
        if (e.beta5 >= 0 && sig.beta5 != e.beta5) bad("beta5 = " + std::to_string(sig.beta5));
        if (!e.boundary.empty()) {
            // the triangles alone must imply the printed cycle
            Surface inferred = parse_face_list("triangles: " + e.faces + "\n");
            std::vector<int> printed;
            for (char c : e.boundary) printed.push_back(vertex_from_char(c));
            if (!same_cycle(inferred.boundary(), printed)) bad("boundary cycle differs");
        }
    } catch (const Error& ex) {
        bad(std::string(err_name(ex.code())) + ": " + ex.what());
    }
    return r;
}

}  // namespace etri
