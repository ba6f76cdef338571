#include "etri/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "etri/analysis.hpp"

namespace etri {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void finish(EnumerationResult& r, std::vector<std::pair<CanonicalCode, Surface>> found) {
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [c, s] : found) {
        std::string key = "non-elliptic";
        if (is_elliptic(s)) key = classify(s).notation();
        ++r.tally[key];
        r.codes.push_back(c);
        r.objects.push_back(std::move(s));
    }
}

// Advancing front over oriented triangles. Every dart (u,v) carries at most
// one triangle; the rotation at each point is kept as successor links so a
// pinched or prematurely closed link is caught as soon as it appears.
class Front {
public:
    Front(int maxv, int bnd, int interior_cap, int boundary_cap)
        : maxv_(maxv), bnd_(bnd), W(maxv + 1), third_(W * W, 0), succ_(W * W, 0), adj_(W * W, 0),
          deg_(W, 0), closed_(W, 0) {
        cap_.assign(W, interior_cap);
        for (int v = 1; v <= bnd; ++v) cap_[v] = boundary_cap;
        if (bnd) {
            n_ = bnd;
            for (int i = 0; i < bnd; ++i) {
                int a = i + 1, b = (i + 1) % bnd + 1;
                third_[b * W + a] = -1;  // outer side
                link(a, b);
            }
        }
    }

    void start_triangle() {
        n_ = 3;
        add(1, 2, 3);
    }

    long nodes = 0;

    void run(const std::function<void(const std::vector<Tri>&, int)>& done) { step(done); }

private:
    struct Undo {
        std::vector<std::pair<int, int>> links;
        std::vector<int> closed;
        bool grew = false;
    };

    int maxv_, bnd_, W;
    int n_ = 0;
    std::vector<int> third_, succ_;
    std::vector<char> adj_;
    std::vector<int> deg_, cap_;
    std::vector<char> closed_;
    std::vector<Tri> tris_;

    bool link(int a, int b) {
        if (adj_[a * W + b]) return false;
        adj_[a * W + b] = adj_[b * W + a] = 1;
        ++deg_[a];
        ++deg_[b];
        return true;
    }
    void unlink(int a, int b) {
        adj_[a * W + b] = adj_[b * W + a] = 0;
        --deg_[a];
        --deg_[b];
    }

    // rotation at x now has from -> to; report whether x's link closed up
    // legally (0 open, 1 closed, -1 illegal)
    int check_link(int x) const {
        if (x <= bnd_) {
            int nxt = x % bnd_ + 1, prv = (x + bnd_ - 2) % bnd_ + 1;
            int len = 1, y = nxt;
            while (succ_[x * W + y] && y != prv) {
                y = succ_[x * W + y];
                ++len;
            }
            if (y != prv) return 0;
            return len == deg_[x] ? 1 : -1;
        }
        return 2;  // handled by cycle test
    }

    int cycle_state(int x, int from) const {
        int len = 1, y = succ_[x * W + from];
        while (y && y != from) {
            y = succ_[x * W + y];
            ++len;
            if (len > deg_[x]) return -1;
        }
        if (!y) return 0;
        if (x <= bnd_) return -1;
        return len == deg_[x] ? 1 : -1;
    }

    bool add(int u, int v, int w, Undo* undo = nullptr) {
        const int tri[3] = {u, v, w};
        for (int i = 0; i < 3; ++i) {
            int a = tri[i], b = tri[(i + 1) % 3], c = tri[(i + 2) % 3];
            if (third_[a * W + b] != 0 || closed_[a]) return false;
            int extra = !adj_[a * W + b] + !adj_[a * W + c];
            if (deg_[a] + extra > cap_[a]) return false;
        }
        for (int i = 0; i < 3; ++i) {
            int a = tri[i], b = tri[(i + 1) % 3], c = tri[(i + 2) % 3];
            if (link(a, b) && undo) undo->links.push_back({a, b});
            third_[a * W + b] = c;
            succ_[a * W + b] = c;  // at a: b -> c
        }
        tris_.push_back({u, v, w});
        return true;
    }

    void remove(int u, int v, int w, const Undo& undo) {
        const int tri[3] = {u, v, w};
        for (int i = 0; i < 3; ++i) {
            int a = tri[i], b = tri[(i + 1) % 3];
            third_[a * W + b] = 0;
            succ_[a * W + b] = 0;
        }
        for (auto [a, b] : undo.links) unlink(a, b);
        for (int x : undo.closed) closed_[x] = 0;
        tris_.pop_back();
    }

    bool settle(int u, int v, int w, Undo& undo) {
        const int tri[3] = {u, v, w};
        for (int i = 0; i < 3; ++i) {
            int x = tri[i], from = tri[(i + 1) % 3];
            int st = x <= bnd_ ? check_link(x) : cycle_state(x, from);
            if (st < 0) return false;
            if (st == 1) {
                closed_[x] = 1;
                undo.closed.push_back(x);
            }
        }
        return true;
    }

    bool open_dart(int& u, int& v) const {
        for (int a = 1; a <= n_; ++a) {
            if (closed_[a]) continue;
            for (int b = 1; b <= n_; ++b)
                if (adj_[a * W + b] && third_[a * W + b] == 0 && third_[b * W + a] != 0) {
                    u = a;
                    v = b;
                    return true;
                }
        }
        return false;
    }

    void step(const std::function<void(const std::vector<Tri>&, int)>& done) {
        ++nodes;
        int u = 0, v = 0;
        if (!open_dart(u, v)) {
            done(tris_, n_);
            return;
        }
        for (int w = 1; w <= n_ + 1 && w <= maxv_; ++w) {
            if (w == u || w == v) continue;
            bool fresh = w == n_ + 1;
            if (!fresh && closed_[w]) continue;
            if (fresh) ++n_;
            Undo undo;
            if (add(u, v, w, &undo)) {
                if (settle(u, v, w, undo)) step(done);
                remove(u, v, w, undo);
            }
            if (fresh) --n_;
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> contractible_edges(const Surface& t) {
    std::vector<std::pair<int, int>> out;
    if (!t.is_closed() || t.num_vertices() <= 4) return out;
    for (int u = 1; u <= t.num_vertices(); ++u)
        for (int v : t.neighbors(u)) {
            if (v < u) continue;
            int common = 0;
            for (int w : t.neighbors(u))
                if (t.adjacent(w, v)) ++common;
            if (common == 2) out.push_back({u, v});
        }
    return out;
}

namespace {

Surface split(const Surface& t, int v, int i, int j) {
    const auto& r = t.neighbors(v);
    const int d = static_cast<int>(r.size());
    const int nv = t.num_vertices() + 1;
    std::set<Tri> moved;
    for (int s = i; s != j; s = (s + 1) % d) {
        Tri f{v, r[s], r[(s + 1) % d]};
        moved.insert(f);
    }
    std::vector<Tri> tris;
    for (const auto& f : t.triangles()) {
        // rotate so v leads
        Tri g = f;
        while (g[0] != v && (g[1] == v || g[2] == v)) g = {g[1], g[2], g[0]};
        if (g[0] == v && moved.count(g))
            tris.push_back({nv, g[1], g[2]});
        else
            tris.push_back(f);
    }
    tris.push_back({v, r[i], nv});
    tris.push_back({v, nv, r[j]});
    return Surface::from_triangles(tris);
}

struct Split {
    int v, i, j;
};

std::vector<Split> splits_of(const Surface& t) {
    std::vector<Split> out;
    for (int v = 1; v <= t.num_vertices(); ++v) {
        const int d = static_cast<int>(t.neighbors(v).size());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j) out.push_back({v, i, j});
    }
    return out;
}

// child accepted iff the new edge lies in the orbit of its canonical
// contractible edge
bool canonical_parent(const Surface& child, int a, int b) {
    auto labs = optimal_labelings(child);
    auto edges = contractible_edges(child);
    auto key = [](const std::vector<int>& l, int u, int v) { return std::make_pair(std::min(l[u], l[v]), std::max(l[u], l[v])); };
    std::pair<int, int> best{1 << 30, 1 << 30};
    for (auto [u, v] : edges) best = std::min(best, key(labs[0], u, v));
    for (const auto& l : labs)
        if (key(l, a, b) == best) return true;
    return false;
}

Surface k4() { return Surface::from_triangles({{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}}); }

struct LevelOut {
    std::vector<std::pair<CanonicalCode, Surface>> kids;
    long nodes = 0, rejected = 0;
};

void grow(const std::vector<Surface>& parents, size_t from, size_t step, LevelOut& out) {
    for (size_t p = from; p < parents.size(); p += step) {
        const Surface& t = parents[p];
        std::set<CanonicalCode> mine;
        for (auto s : splits_of(t)) {
            ++out.nodes;
            Surface c = split(t, s.v, s.i, s.j);
            if (!canonical_parent(c, s.v, t.num_vertices() + 1)) {
                ++out.rejected;
                continue;
            }
            CanonicalCode code = canonical_code(c);
            if (!mine.insert(code).second) {
                ++out.rejected;
                continue;
            }
            out.kids.push_back({code, std::move(c)});
        }
    }
}

}  // namespace

std::vector<Surface> vertex_splits(const Surface& t) {
    std::vector<Surface> out;
    for (auto s : splits_of(t)) out.push_back(split(t, s.v, s.i, s.j));
    return out;
}

EnumerationResult enumerate_closed(int n, bool elliptic_only, const EnumOptions& opt) {
    if (n < 4) throw Error(Err::Domain, "n >= 4");
    if (n > opt.cap) throw Error(Err::CapExceeded, "n = " + std::to_string(n) + " above cap " + std::to_string(opt.cap));
    auto t0 = Clock::now();
    EnumerationResult r;
    r.n = n;
    std::vector<std::pair<CanonicalCode, Surface>> level{{canonical_code(k4()), k4()}};
    for (int m = 5; m <= n; ++m) {
        std::vector<Surface> parents;
        for (auto& [c, s] : level) parents.push_back(std::move(s));
        const int w = std::max(1, opt.workers);
        std::vector<LevelOut> outs(w);
        std::vector<std::thread> pool;
        for (int k = 1; k < w; ++k) pool.emplace_back(grow, std::cref(parents), k, w, std::ref(outs[k]));
        grow(parents, 0, w, outs[0]);
        for (auto& th : pool) th.join();
        level.clear();
        std::set<CanonicalCode> seen;
        for (auto& o : outs) {
            r.stats.nodes += o.nodes;
            r.stats.rejected += o.rejected;
            for (auto& k : o.kids) {
                if (!seen.insert(k.first).second)
                    throw Error(Err::Domain, "canonical augmentation produced a duplicate");
                level.push_back(std::move(k));
            }
        }
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    r.stats.accepted = static_cast<long>(level.size());
    if (elliptic_only)
        level.erase(std::remove_if(level.begin(), level.end(), [](const auto& x) { return !is_elliptic(x.second); }),
                    level.end());
    finish(r, std::move(level));
    r.seconds = since(t0);
    return r;
}

EnumerationResult enumerate_closed_naive(int n, bool elliptic_only, int cap) {
    if (n < 4) throw Error(Err::Domain, "n >= 4");
    if (n > cap) throw Error(Err::CapExceeded, "n = " + std::to_string(n) + " above cap " + std::to_string(cap));
    auto t0 = Clock::now();
    EnumerationResult r;
    r.n = n;
    const int dcap = elliptic_only ? 6 : n - 1;
    Front f(n, 0, dcap, dcap);
    f.start_triangle();
    std::set<CanonicalCode> seen;
    std::vector<std::pair<CanonicalCode, Surface>> found;
    f.run([&](const std::vector<Tri>& tris, int used) {
        if (used != n) return;
        try {
            Surface s = Surface::from_triangles(tris);
            if (!s.is_closed() || s.num_vertices() != n) return;
            ++r.stats.accepted;
            CanonicalCode c = canonical_code(s);
            if (seen.insert(c).second)
                found.push_back({c, std::move(s)});
            else
                ++r.stats.rejected;
        } catch (const Error&) {
            ++r.stats.rejected;
        }
    });
    r.stats.nodes = f.nodes;
    finish(r, std::move(found));
    r.seconds = since(t0);
    return r;
}

EnumerationResult enumerate_patches(int b, const std::optional<std::array<int, 3>>& type, int max_f1,
                                    const EnumOptions& opt) {
    if (b < 3) throw Error(Err::Domain, "b >= 3");
    if (b > opt.cap) throw Error(Err::CapExceeded, "b = " + std::to_string(b) + " above cap " + std::to_string(opt.cap));
    if (max_f1 < b) throw Error(Err::Domain, "max f1 below b");
    auto t0 = Clock::now();
    EnumerationResult r;
    r.n = b;
    // patch degree = neighbours + 2 on the boundary
    Front f(max_f1, b, 6, 4);
    std::vector<int> rim(b);
    for (int i = 0; i < b; ++i) rim[i] = i + 1;
    std::set<CanonicalCode> seen;
    std::vector<std::pair<CanonicalCode, Surface>> found;
    f.run([&](const std::vector<Tri>& tris, int) {
        try {
            Surface s = Surface::from_triangles(tris, rim);
            if (s.is_closed()) return;
            ++r.stats.accepted;
            if (!is_elliptic(s)) return;
            if (type) {
                Signature g = classify(s);
                if (g.a3 != (*type)[0] || g.a4 != (*type)[1] || g.a5 != (*type)[2]) return;
            }
            CanonicalCode c = canonical_code(s);
            if (seen.insert(c).second)
                found.push_back({c, std::move(s)});
            else
                ++r.stats.rejected;
        } catch (const Error&) {
            ++r.stats.rejected;
        }
    });
    r.stats.nodes = f.nodes;
    finish(r, std::move(found));
    r.seconds = since(t0);
    return r;
}

const char* status_name(Existence::Status s) {
    switch (s) {
        case Existence::Status::Exists: return "Exists";
        case Existence::Status::NotExistsEnumerated: return "NotExists(enumerated)";
        case Existence::Status::NotExistsCited: return "NotExists(cited)";
        case Existence::Status::Unknown: return "Unknown";
    }
    return "?";
}

}  // namespace etri
