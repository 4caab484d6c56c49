#pragma once

#include <optional>
#include <span>
#include <vector>

#include "treedeg/tree.hpp"

namespace treedeg {

// Witness for a nonnegative integer combination: parts are distinct and
// descending, coeffs[i] multiplies parts[i]. Among all decompositions the
// coefficient vector is lexicographically greatest in that order, so the
// largest part is used as often as possible.
struct CombWitness {
    std::vector<int> parts;
    std::vector<int> coeffs;
};

// DP reachability over 0..target. target 0 is the empty combination;
// negative targets and nonpositive parts are never members / never used.
bool is_lin_comb(int target, std::span<const int> parts, CombWitness* witness = nullptr);

// m = k(n-1)+3 for some integer k in [0, n-5].
bool exact_m_family(int m, int n);

// Divisors of x that are at least 3, ascending.
std::vector<int> divisors_ge3(int x);

enum class PredictionRule {
    GeneralExact,     // tree is not a T(p,q) shape: value m+n-3
    SingleLeafExact,  // T(1,n-4): m+n-2 when m+n-3 decomposes over divisor parts, else m+n-3
    BothEndsExact,    // T(p,n-3-p), p>=2: m+n-2 when m+n-3 decomposes over {2n-6,n-1,n-2}
    UpperBoundOnly,   // outside the m-family but m+n-3 misses {n-1,n-2}
    Unknown,
    OutOfScope,
};

inline const char* to_string(PredictionRule r) {
    switch (r) {
        case PredictionRule::GeneralExact: return "general_exact";
        case PredictionRule::SingleLeafExact: return "single_leaf_exact";
        case PredictionRule::BothEndsExact: return "both_ends_exact";
        case PredictionRule::UpperBoundOnly: return "upper_bound_only";
        case PredictionRule::Unknown: return "unknown";
        case PredictionRule::OutOfScope: return "out_of_scope";
    }
    return "unknown";
}

// Membership tests actually performed for one prediction; an absent optional
// means the rule that fired did not need that test.
struct SideConditions {
    bool in_exact_m_family = false;
    std::optional<TpqShape> tpq;
    std::optional<bool> base_parts_member;       // m+n-3 over {n-1, n-2}
    std::optional<bool> divisor_parts_member;    // m+n-3 over {n-1, n-2, n-3+a : a | n-3, a >= 3}
    std::optional<bool> both_ends_parts_member;  // m+n-3 over {2n-6, n-1, n-2}
};

struct RamseyPrediction {
    std::optional<int> value;  // absent for Unknown / OutOfScope
    bool exact = false;        // false when the value is an upper bound only
    PredictionRule rule = PredictionRule::Unknown;
    SideConditions side;
};

// Tree-versus-star prediction for R(t, K_{1,m}). Exact rules fire only when
// exact_m_family(m, n) holds; outside the family a miss of {n-1, n-2} still
// gives the upper bound m+n-3 for trees that are not T(p,q) shapes.
// Scope: n >= 5, max degree <= n-3, m >= 1; violations report OutOfScope.
RamseyPrediction predict_ramsey(const Tree& t, int m);

}  // namespace treedeg
