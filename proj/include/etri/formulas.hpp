#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "etri/analysis.hpp"

namespace etri {

// C(n,2) with C(0,2) = C(1,2) = 0
long binom2(long n);

struct FormulaResult {
    long N = 0;
    std::map<std::string, long> derived;
    std::vector<std::pair<std::string, bool>> conditions;
};

// (h,0,0): beta4 = 3.  (h,k,0), 0<k<h: [0,0,k].  (h,k,l), 0<l<=k<h: [0,l,k].
// Throws Error(Domain) outside these ranges.
FormulaResult N_030(long h, long k, long l);

// [0,0,k] count as a function of (h,k); equals N_030(h,0,0) at k = 0.
long N_00k(long h, long k);

// Truncated patches, types 1..7. Parameter names:
//   1: s,t,c   2: s,t,c   3: s,c,k,l   4: r,s,t,c1,c2   5: s,t,c1,c2
//   6: r,s,t,c1,c2,c3   7: u,v,s,t
// An optional "h" is checked against the derived value.
// Throws Error(Domain) naming the first failed condition.
FormulaResult N_type(int type, const std::map<std::string, long>& params);

// Predicted (1,1,1,N)_b for families A..P.
Signature family_signature(char family, long k, long m);

}  // namespace etri
