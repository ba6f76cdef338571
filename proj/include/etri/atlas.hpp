#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "etri/enumerator.hpp"
#include "etri/surface.hpp"

namespace etri {

using TypeTuple = std::array<int, 3>;

// The 19 solutions of 3a3 + 2a4 + a5 = 12, in table order.
const std::vector<TypeTuple>& sphere_types();
bool is_sphere_type(int a3, int a4, int a5);

// Status as printed in the existence table.
enum class PrintedStatus { Exists, NotExists, Unknown };
const char* printed_name(PrintedStatus s);
PrintedStatus printed_status(int a3, int a4, int a5, long n6);
// Citation text for a printed nonexistence, empty otherwise.
std::string nonexistence_citation(int a3, int a4, int a5, long n6);

struct Construction {
    Surface surface;
    std::string recipe;
};
// Construction recipes only (catalog hosts, rewrites, gluing, sums,
// fullering). Every returned surface validates and lies in the cell.
std::optional<Construction> construct(int a3, int a4, int a5, long n6);

// Shared, cached elliptic enumeration (thread safe).
const EnumerationResult& cached_elliptic(int n, int cap);

struct AtlasCell {
    long n6 = 0;
    Existence result;
    PrintedStatus printed = PrintedStatus::Unknown;
};

struct AtlasRow {
    TypeTuple type{};
    std::vector<AtlasCell> cells;  // n6 = 0..max_n6
};

// Cells are independent and fanned out over `workers` threads; the output
// does not depend on the worker count.
std::vector<AtlasRow> atlas(long max_n6, int enum_cap, int workers = 1);

// One character per cell: E exists, N not (enumerated), C not (cited), ? unknown.
std::string status_letter(Existence::Status s);
std::string atlas_text(const std::vector<AtlasRow>& rows);

}  // namespace etri
