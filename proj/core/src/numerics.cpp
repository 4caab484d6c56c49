#include "treedeg/numerics.hpp"

#include <algorithm>
#include <functional>

namespace treedeg {

bool is_lin_comb(int target, std::span<const int> parts, CombWitness* witness) {
    if (witness) {
        witness->parts.clear();
        witness->coeffs.clear();
    }
    if (target < 0) return false;
    std::vector<int> ps(parts.begin(), parts.end());
    std::erase_if(ps, [](int p) { return p < 1; });
    std::sort(ps.begin(), ps.end(), std::greater<>());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    size_t k = ps.size();
    // reach[i][v]: v is a combination of ps[i..].
    auto reach = std::vector<std::vector<char>>(k + 1, std::vector<char>(size_t(target) + 1, 0));
    reach[k][0] = 1;
    for (size_t i = k; i-- > 0;)
        for (int v = 0; v <= target; ++v)
            reach[i][size_t(v)] =
                reach[i + 1][size_t(v)] || (v >= ps[i] && reach[i][size_t(v - ps[i])]);
    if (!reach[0][size_t(target)]) return false;
    if (witness) {
        witness->parts = ps;
        witness->coeffs.assign(k, 0);
        int r = target;
        for (size_t i = 0; i < k; ++i) {
            // Greatest count of ps[i] leaving a remainder the later parts cover;
            // one such count exists because reach[i][r] holds.
            int c = r / ps[i];
            while (!reach[i + 1][size_t(r - c * ps[i])]) --c;
            witness->coeffs[i] = c;
            r -= c * ps[i];
        }
    }
    return true;
}

bool exact_m_family(int m, int n) {
    if (n < 5 || m < 3) return false;
    if ((m - 3) % (n - 1) != 0) return false;
    return (m - 3) / (n - 1) <= n - 5;
}

std::vector<int> divisors_ge3(int x) {
    std::vector<int> out;
    for (int d = 3; d <= x; ++d)
        if (x % d == 0) out.push_back(d);
    return out;
}

RamseyPrediction predict_ramsey(const Tree& t, int m) {
    RamseyPrediction r;
    int n = t.vertex_count();
    if (n < 5 || m < 1 || t.max_degree() > n - 3) {
        r.rule = PredictionRule::OutOfScope;
        return r;
    }
    r.side.tpq = recognize_tpq(t);
    r.side.in_exact_m_family = exact_m_family(m, n);
    int base = m + n - 3;
    if (r.side.in_exact_m_family) {
        r.exact = true;
        if (!r.side.tpq) {
            r.rule = PredictionRule::GeneralExact;
            r.value = base;
        } else if (r.side.tpq->p == 1) {
            std::vector<int> ps{n - 1, n - 2};
            for (int a : divisors_ge3(n - 3)) ps.push_back(n - 3 + a);
            bool member = is_lin_comb(base, ps);
            r.side.divisor_parts_member = member;
            r.rule = PredictionRule::SingleLeafExact;
            r.value = member ? base + 1 : base;
        } else {
            std::vector<int> ps{2 * n - 6, n - 1, n - 2};
            bool member = is_lin_comb(base, ps);
            r.side.both_ends_parts_member = member;
            r.rule = PredictionRule::BothEndsExact;
            r.value = member ? base + 1 : base;
        }
        return r;
    }
    std::vector<int> ps{n - 1, n - 2};
    r.side.base_parts_member = is_lin_comb(base, ps);
    if (!*r.side.base_parts_member && !r.side.tpq) {
        r.rule = PredictionRule::UpperBoundOnly;
        r.value = base;
        return r;
    }
    r.rule = PredictionRule::Unknown;
    return r;
}

}  // namespace treedeg
