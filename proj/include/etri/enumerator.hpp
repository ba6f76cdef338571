#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etri/surface.hpp"

namespace etri {

struct EnumerationStats {
    long nodes = 0;       // search nodes or split candidates examined
    long accepted = 0;    // objects before the final filter
    long rejected = 0;    // dropped by the canonical test or duplicate check
};

struct EnumerationResult {
    int n = 0;  // vertex count (closed) or boundary length (patches)
    std::vector<CanonicalCode> codes;  // sorted, pairwise distinct
    std::vector<Surface> objects;      // same order as codes
    std::map<std::string, long> tally; // signature notation -> count ("non-elliptic" otherwise)
    double seconds = 0;
    EnumerationStats stats;
};

struct EnumOptions {
    int cap = 10;     // largest n (closed) or b (patches) accepted
    int workers = 1;  // parallel split of the last level
};

// Vertex splits from K4 with a canonical-edge acceptance test.
EnumerationResult enumerate_closed(int n, bool elliptic_only, const EnumOptions& opt = {});
// Backtracking over oriented triangles, for cross-checks; n <= 7 by default.
EnumerationResult enumerate_closed_naive(int n, bool elliptic_only, int cap = 7);

// Discs with boundary 1..b and at most max_f1 points, degrees at most 6,
// optionally of type (a3,a4,a5). Default cap b <= 9.
EnumerationResult enumerate_patches(int b, const std::optional<std::array<int, 3>>& type, int max_f1,
                                    const EnumOptions& opt = {9, 1});

// The edges whose contraction leaves a triangulation (no separating triangle).
std::vector<std::pair<int, int>> contractible_edges(const Surface& t);
// All vertex splits of t (with repetition up to symmetry).
std::vector<Surface> vertex_splits(const Surface& t);

struct Existence {
    enum class Status { Exists, NotExistsEnumerated, NotExistsCited, Unknown };
    Status status = Status::Unknown;
    std::optional<Surface> witness;
    std::string provenance;  // catalog id, recipe, enumeration run or citation
};
const char* status_name(Existence::Status s);

// Catalog, then construction recipes, then enumeration when f1 <= enum_cap,
// then the cited status, else Unknown. Throws NotATypeTuple.
Existence check_existence(int a3, int a4, int a5, long a6, int enum_cap = 9);

}  // namespace etri
