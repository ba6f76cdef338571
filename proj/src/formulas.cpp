#include "etri/formulas.hpp"

#include <stdexcept>

#include "etri/surface.hpp"

namespace etri {

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

namespace {

long get(const std::map<std::string, long>& p, const char* name) {
    auto it = p.find(name);
    if (it == p.end()) throw Error(Err::Domain, std::string("missing parameter ") + name);
    return it->second;
}

void require(FormulaResult& r, const std::string& name, bool ok) {
    r.conditions.push_back({name, ok});
    if (!ok) throw Error(Err::Domain, "condition failed: " + name);
}

bool div3(long x) { return x % 3 == 0; }

void check_h(FormulaResult& r, const std::map<std::string, long>& p, long h) {
    r.derived["h"] = h;
    auto it = p.find("h");
    if (it != p.end()) require(r, "h matches", it->second == h);
}

}  // namespace

long N_00k(long h, long k) { return binom2(h + k + 2) - binom2(2 * k + 1) + binom2(k) - 3; }

FormulaResult N_030(long h, long k, long l) {
    FormulaResult r;
    if (h < 1) throw Error(Err::Domain, "h >= 1");
    if (k == 0 && l == 0) {
        r.N = binom2(h + 2) - 3;
        r.derived["beta4"] = 3;
    } else if (l == 0) {
        if (!(0 < k && k < h)) throw Error(Err::Domain, "0 < k < h");
        r.N = N_00k(h, k);
        r.derived["beta4"] = 2;
        // boundary parts h+l and 2h-l with l = h-k
        r.derived["l"] = h - k;
        r.derived["part1"] = h + (h - k);
        r.derived["part2"] = 2 * h - (h - k);
    } else {
        if (!(0 < l && l <= k && k < h)) throw Error(Err::Domain, "0 < l <= k < h");
        r.N = binom2(h + k + l + 2) - 3 * binom2(k + 1) - 3 * binom2(l + 1) - 3;
        r.derived["beta4"] = 1;
    }
    return r;
}

FormulaResult N_type(int type, const std::map<std::string, long>& p) {
    FormulaResult r;
    switch (type) {
        case 1: {
            long s = get(p, "s"), t = get(p, "t"), c = get(p, "c");
            long h = c - 1 + s;
            require(r, "s = t", s == t);
            check_h(r, p, h);
            require(r, "h >= c", h >= c);
            r.N = binom2(h + 2) - binom2(c) - 4;
            break;
        }
        case 2: {
            long s = get(p, "s"), t = get(p, "t"), c = get(p, "c");
            require(r, "s+t+2(c-1) multiple of 3", div3(s + t + 2 * (c - 1)));
            require(r, "2s-t+(c-1) multiple of 3", div3(2 * s - t + (c - 1)));
            require(r, "2t-s+(c-1) multiple of 3", div3(2 * t - s + (c - 1)));
            long h = (s + t + 2 * (c - 1)) / 3;
            long k = (2 * s - t + (c - 1)) / 3;
            long l = (2 * t - s + (c - 1)) / 3;
            check_h(r, p, h);
            r.derived["k"] = k;
            r.derived["l"] = l;
            r.N = binom2(h + k + 2) - binom2(2 * k + 1) + binom2(k) - binom2(c) - 4;
            break;
        }
        case 3: {
            long s = get(p, "s"), c = get(p, "c"), k = get(p, "k"), l = get(p, "l");
            require(r, "s+2(c-1) multiple of 3", div3(s + 2 * (c - 1)));
            require(r, "2s+(c-1) multiple of 3", div3(2 * s + (c - 1)));
            long h = (s + 2 * (c - 1)) / 3;
            check_h(r, p, h);
            // evaluated as printed; N_alt uses C(k+1,2) as in the beta4 = 1 count
            r.N = binom2(h + k + l + 2) - 3 * binom2(k + l) - 3 * binom2(l + 1) - binom2(c) - 4;
            r.derived["N_alt"] = binom2(h + k + l + 2) - 3 * binom2(k + 1) - 3 * binom2(l + 1) - binom2(c) - 4;
            break;
        }
        case 4: {
            long rr = get(p, "r"), s = get(p, "s"), t = get(p, "t"), c1 = get(p, "c1"), c2 = get(p, "c2");
            require(r, "r+s+t+2(c1-1)+2(c2-1) multiple of 3", div3(rr + s + t + 2 * (c1 - 1) + 2 * (c2 - 1)));
            require(r, "s+c1-1 = t+c2-1", s + c1 - 1 == t + c2 - 1);
            require(r, "t+c2-1 = r+c1+c2-2", t + c2 - 1 == rr + c1 + c2 - 2);
            long h = s + c1 - 1;
            check_h(r, p, h);
            r.N = binom2(h + 2) - binom2(c1) - binom2(c2) - 5;
            break;
        }
        case 5: {
            long s = get(p, "s"), t = get(p, "t"), c1 = get(p, "c1"), c2 = get(p, "c2");
            long cc = (c1 - 1) + (c2 - 1);
            require(r, "s+t+2(c1-1)+2(c2-1) multiple of 3", div3(s + t + 2 * cc));
            require(r, "2s-t+(c1-1)+(c2-1) multiple of 3", div3(2 * s - t + cc));
            require(r, "2t-s+(c1-1)+(c2-1) multiple of 3", div3(2 * t - s + cc));
            long h = (s + t + 2 * cc) / 3;
            long k = (2 * s - t + cc) / 3;
            long l = (2 * t - s + cc) / 3;
            check_h(r, p, h);
            r.derived["k"] = k;
            r.derived["l"] = l;
            r.N = binom2(h + k + 2) - binom2(2 * k + 1) + binom2(k) - binom2(c1) - binom2(c2) - 5;
            break;
        }
        case 6: {
            long rr = get(p, "r"), s = get(p, "s"), t = get(p, "t");
            long c1 = get(p, "c1"), c2 = get(p, "c2"), c3 = get(p, "c3");
            require(r, "r+s+t+2(c1-1)+2(c2-1)+2(c3-1) multiple of 3",
                    div3(rr + s + t + 2 * (c1 - 1) + 2 * (c2 - 1) + 2 * (c3 - 1)));
            require(r, "r+c1+c3-2 = s+c1+c2-2", rr + c1 + c3 == s + c1 + c2);
            require(r, "s+c1+c2-2 = t+c2+c3-2", s + c1 + c2 == t + c2 + c3);
            long h = rr + c1 + c3 - 2;
            check_h(r, p, h);
            r.N = binom2(h + 2) - binom2(c1) - binom2(c2) - binom2(c3) - 6;
            break;
        }
        case 7: {
            long u = get(p, "u"), v = get(p, "v"), s = get(p, "s"), t = get(p, "t");
            require(r, "b = u+v+s+t even", (u + v + s + t) % 2 == 0);
            require(r, "u = t", u == t);
            require(r, "v = s", v == s);
            r.derived["b"] = u + v + s + t;
            r.N = (u + 1) * (v + 1) - 4;
            break;
        }
        default:
            throw Error(Err::Domain, "truncation type must be 1..7");
    }
    return r;
}

Signature family_signature(char f, long k, long m) {
    Signature s;
    s.closed = false;
    s.a3 = s.a4 = s.a5 = 1;
    if (m < 0) throw Error(Err::Domain, "m >= 0");
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw Error(Err::Domain, std::string("family ") + f + ": " + what);
    };
    if (f == 'A') {
        need(k >= 3 && k % 2 == 1, "k >= 3 odd");
        long q = (k + 1) / 2;
        s.a6 = 2 * (q * q - 2) + k * m;
        s.b = static_cast<int>(2 * k - 1 + 2 * m);
        s.beta4 = 1;
        return s;
    }
    struct Row {
        char f;
        long kmin, off, slope;
    };
    // off: constant subtracted from C(k+1,2); slope: 2k - slope per unit of m
    static const Row strip[] = {{'B', 5, 10, 7}, {'C', 7, 20, 11}, {'D', 3, 4, 3},
                                {'E', 10, 40, 15}, {'F', 18, 124, 27}, {'G', 14, 76, 21}};
    for (const auto& r : strip)
        if (r.f == f) {
            need(k >= r.kmin, "k too small");
            s.a6 = binom2(k + 1) - r.off + (2 * k - r.slope) * m;
            s.b = static_cast<int>(k + 2 * m);
            s.beta5 = 1;
            return s;
        }
    static const Row generic[] = {{'H', 3, 4, 0},  {'I', 4, 8, 0},  {'J', 5, 10, 0}, {'K', 6, 16, 0}, {'L', 7, 20, 0},
                                  {'M', 8, 26, 0}, {'N', 9, 34, 0}, {'O', 10, 40, 0}, {'P', 10, 44, 0}};
    for (const auto& r : generic)
        if (r.f == f) {
            need(k >= r.kmin, "k too small");
            need(m == 0, "no strip parameter");
            s.a6 = binom2(k + 1) - r.off;
            s.b = static_cast<int>(k);
            s.beta5 = 1;
            return s;
        }
    throw Error(Err::Domain, std::string("unknown family ") + f);
}

}  // namespace etri
