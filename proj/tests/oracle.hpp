#pragma once
// Independent brute-force checks used by the tests.
#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "etri/surface.hpp"

namespace oracle {

inline std::set<std::vector<int>> face_set(const etri::Surface& s, const std::vector<int>& perm) {
    std::set<std::vector<int>> out;
    for (const auto& f : s.triangles()) {
        std::vector<int> g{perm[f[0]], perm[f[1]], perm[f[2]]};
        std::sort(g.begin(), g.end());
        out.insert(g);
    }
    return out;
}

// Isomorphism of the unoriented face sets (reflections identified) by trying
// every bijection; only for small vertex counts.
inline bool permutation_isomorphic(const etri::Surface& a, const etri::Surface& b) {
    const int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_triangles() != b.num_triangles()) return false;
    if (a.boundary_length() != b.boundary_length()) return false;
    const auto target = face_set(b, [&] {
        std::vector<int> id(n + 1);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        std::vector<int> perm(n + 1);
        for (int i = 0; i < n; ++i) perm[i + 1] = p[i];
        bool deg_ok = true;
        for (int v = 1; v <= n && deg_ok; ++v) deg_ok = a.degree(v) == b.degree(perm[v]);
        if (deg_ok && face_set(a, perm) == target) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Layers of boundary-first BFS; the distance of v to the boundary.
inline int boundary_bfs(const etri::Surface& s, int v) {
    std::vector<int> dist(s.num_vertices() + 1, -1);
    std::vector<int> queue;
    for (int b : s.boundary()) {
        dist[b] = 0;
        queue.push_back(b);
    }
    for (size_t i = 0; i < queue.size(); ++i)
        for (int w : s.neighbors(queue[i]))
            if (dist[w] < 0) {
                dist[w] = dist[queue[i]] + 1;
                queue.push_back(w);
            }
    return dist[v];
}

inline etri::Surface shuffled(const etri::Surface& s, unsigned seed) {
    std::vector<int> p(s.num_vertices());
    std::iota(p.begin(), p.end(), 1);
    // small LCG keeps the test deterministic without <random> engines differing
    for (size_t i = p.size(); i > 1; --i) {
        seed = seed * 1103515245u + 12345u;
        std::swap(p[i - 1], p[(seed >> 8) % i]);
    }
    std::vector<int> perm(s.num_vertices() + 1);
    for (size_t i = 0; i < p.size(); ++i) perm[i + 1] = p[i];
    return s.relabeled(perm);
}

}  // namespace oracle
