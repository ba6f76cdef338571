#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "etri/analysis.hpp"
#include "etri/surface.hpp"

namespace etri {

struct CatalogEntry {
    std::string id;     // "<table>/<signature>", e.g. "2.2/(1,1,1,2)_4"
    std::string table;  // "2.2"
    bool closed = true;
    int a3 = 0, a4 = 0, a5 = 0;
    long a6 = 0;
    int b = 0;
    std::string boundary;  // as printed, empty for closed entries
    int f3 = -1, beta4 = -1, beta5 = -1;  // -1 when not printed
    std::string faces;                    // verbatim triangle tokens
    // printed rows that fail validation: "<error name> <note>"
    std::string quarantine;

    Surface surface() const;
    std::string notation() const;
};

struct CatalogFilter {
    std::optional<std::array<int, 3>> type;
    std::optional<int> b;
    std::optional<std::string> table;
    std::optional<bool> closed;
};

// Throws UnknownEntry. An id whose signature part names a unique entry is
// accepted even when the table prefix differs.
const CatalogEntry& catalog_get(const std::string& id);
std::vector<const CatalogEntry*> catalog_all(const CatalogFilter& filter = {});
// entries with this exact cell: (a3,a4,a5,a6) and b (b = 0 for closed)
std::vector<const CatalogEntry*> catalog_lookup(int a3, int a4, int a5, long a6, int b = 0);

struct GoldenResult {
    std::string id;
    bool ok = true;
    bool quarantined = false;
    std::string detail;
};
// parse, validate, classify and compare against the printed data. A
// quarantined entry is ok when it fails with exactly the recorded error.
GoldenResult check_entry(const CatalogEntry& e);

// cyclic sequences equal up to rotation and reversal
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace etri
