#pragma once

// Hyperstandard boundary-multiplicity sets.
//
// Phi(R) = { 1 - r/l : r in R, l >= 1 } for a finite rational R in [0,1]
// with 1 in R. The augmented set Gamma(N, Phi) consists of the numbers
//
//     b = 1 - r/l + (1/l) * sum_{n in N} m_n/(n+1),   b in [0,1],
//
// with nonnegative integers m_n. The abridged variant fixes l = 1.
// Gamma(N, Phi) is a dcc subset of [0,1] with sole accumulation point 1,
// so its intersection with [0, 1-eps] is finite and enumerable.

#include <algorithm>
#include <set>
#include <vector>

#include "complements/errors.hpp"
#include "complements/rat.hpp"

namespace complements {

struct HyperstandardSpec {
    std::vector<Rat> R;  // ascending, distinct, in [0,1], contains 1
    std::vector<Int> N;  // ascending, distinct, positive
    bool abridged = false;

    HyperstandardSpec(std::vector<Rat> r, std::vector<Int> n, bool abridged_l1 = false)
        : abridged(abridged_l1) {
        std::set<Rat> rs(r.begin(), r.end());
        rs.insert(Rat(1));  // 1 is always adjoined to a presentation
        for (const Rat& x : rs) {
            if (x < 0 || x > 1)
                throw domain_error("bad-spec", "hyperstandard R must lie in [0,1], got " + x.str());
            R.push_back(x);
        }
        std::set<Int> ns(n.begin(), n.end());
        for (const Int& x : ns) {
            if (x <= 0) throw domain_error("bad-spec", "hyperstandard N must be positive integers");
            N.push_back(x);
        }
    }
};

namespace detail {

// All distinct values sum m_n/(n+1) <= cap with m_n nonnegative integers.
inline std::set<Rat> correction_sums(const std::vector<Int>& n_set, const Rat& cap) {
    std::set<Rat> sums{Rat(0)};
    if (cap < 0) return {};
    for (const Int& n : n_set) {
        Rat step(1, n + 1);
        std::set<Rat> next;
        for (const Rat& s : sums)
            for (Rat v = s; v <= cap; v += step) next.insert(v);
        sums = std::move(next);
    }
    return sums;
}

inline bool representable_as_correction(const Rat& s, const std::vector<Int>& n_set,
                                        std::size_t idx = 0) {
    if (s < 0) return false;
    if (s == 0) return true;
    if (idx == n_set.size()) return false;
    Rat step(1, n_set[idx] + 1);
    if (idx + 1 == n_set.size()) return (s / step).is_integer();
    for (Rat v = 0; v <= s; v += step)
        if (representable_as_correction(s - v, n_set, idx + 1)) return true;
    return false;
}

}  // namespace detail

// Membership of b in Gamma(N, Phi(R)) (or the abridged variant). Decision
// by bounded search: for b < 1, l(1-b) = r - sum m_n/(n+1) forces
// l <= r/(1-b); the m_n are bounded by r(n+1).
inline bool gamma_contains(const HyperstandardSpec& spec, const Rat& b) {
    if (b < 0 || b > 1) return false;
    if (b == 1) {
        // 1 is in the set iff some r in R is itself a correction sum.
        for (const Rat& r : spec.R)
            if (detail::representable_as_correction(r, spec.N)) return true;
        return false;
    }
    for (const Rat& r : spec.R) {
        if (spec.abridged) {
            if (detail::representable_as_correction(b - 1 + r, spec.N)) return true;
            continue;
        }
        Rat lmax = r / (Rat(1) - b);
        for (Int l = 1; Rat(l) <= lmax; ++l)
            if (detail::representable_as_correction(r - Rat(l) * (Rat(1) - b), spec.N)) return true;
    }
    return false;
}

// Gamma(N, Phi) intersected with [0, 1-eps], sorted ascending. The cutoff
// is clamped at 0, so eps > 1 still yields {0}.
inline std::vector<Rat> gamma_enumerate_below(const HyperstandardSpec& spec, const Rat& eps) {
    if (eps <= 0) throw domain_error("bad-eps", "gamma_enumerate_below: eps must be positive");
    Rat cutoff = max(Rat(0), Rat(1) - eps);
    std::set<Rat> out{Rat(0)};  // 0 = 1 - 1/1 is always a member
    for (const Rat& r : spec.R) {
        auto sums = detail::correction_sums(spec.N, r);
        if (spec.abridged) {
            for (const Rat& s : sums) {
                Rat b = Rat(1) - r + s;
                if (b >= 0 && b <= cutoff) out.insert(b);
            }
            continue;
        }
        for (const Rat& s : sums) {
            // b = 1 - (r - s)/l <= cutoff  <=>  l <= (r - s)/(1 - cutoff)
            Rat num = r - s;
            for (Int l = 1; Rat(l) * (Rat(1) - cutoff) <= num; ++l) {
                Rat b = Rat(1) - num / Rat(l);
                if (b >= 0) out.insert(b);
            }
        }
    }
    return std::vector<Rat>(out.begin(), out.end());
}

// Largest element of Gamma(N, Phi) not exceeding b (the low approximation
// b_{N_Phi}). Total on [0,1] since 0 is always a member; b = 1 requires
// 1 to be a member (guaranteed when N is nonempty).
inline Rat low_approximation(const HyperstandardSpec& spec, const Rat& b) {
    if (b < 0 || b > 1)
        throw domain_error("bad-multiplicity", "low_approximation: b must lie in [0,1]");
    if (gamma_contains(spec, b)) return b;
    if (b == 1)
        throw domain_error("no-maximum",
                           "low_approximation: 1 is not a member and Gamma accumulates at 1");
    auto below = gamma_enumerate_below(spec, Rat(1) - b);
    return below.back();
}

// The presentation R' with Gamma(N, Phi(R)) = Phi(R'):
// R' = { r - sum m_n/(n+1) >= 0 : r in R }. Only defined for the full
// (non-abridged) variant; abridged sets are finite, hence not hyperstandard.
inline std::vector<Rat> as_hyperstandard(const HyperstandardSpec& spec) {
    if (spec.abridged)
        throw domain_error("abridged-spec", "as_hyperstandard: abridged sets admit no Phi(R')");
    std::set<Rat> out;
    for (const Rat& r : spec.R)
        for (const Rat& s : detail::correction_sums(spec.N, r)) out.insert(r - s);
    return std::vector<Rat>(out.begin(), out.end());
}

// The divisorial-adjunction transform of a presentation:
// returns Rbar union {0} where Rbar = { r0 - sum_i (1 - r_i) : r_i in R } cap [0,1].
// Idempotent, and Phi(Rbar union {0}) presents the tilde of Phi(R).
inline std::vector<Rat> tilde_set(std::vector<Rat> r_in) {
    if (r_in.empty()) r_in.push_back(Rat(1));
    std::set<Rat> r_set(r_in.begin(), r_in.end());
    r_set.insert(Rat(1));
    for (const Rat& r : r_set)
        if (r < 0 || r > 1) throw domain_error("bad-spec", "tilde_set: R must lie in [0,1]");

    // Distinct multiset sums of the drops 1 - r_i, capped at 1.
    std::set<Rat> sums{Rat(0)};
    for (const Rat& r : r_set) {
        Rat drop = Rat(1) - r;
        if (drop == 0) continue;
        std::set<Rat> next;
        for (const Rat& s : sums)
            for (Rat v = s; v <= 1; v += drop) next.insert(v);
        sums = std::move(next);
    }
    std::set<Rat> out{Rat(0)};
    for (const Rat& r0 : r_set)
        for (const Rat& s : sums)
            if (r0 - s >= 0) out.insert(r0 - s);
    return std::vector<Rat>(out.begin(), out.end());
}

}  // namespace complements
