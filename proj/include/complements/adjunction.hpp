#pragma once

// The 1-to-1 affine correspondence between multiplicities b on the total
// space and d on the base,
//
//     d = 1 - r/l + b/l   (direct),      b = r - l + l d   (inverse),
//
// parametrized by adjunction constants (r, l) with r <= 1 and l a positive
// integer, together with its transport and inequality properties.

#include <set>
#include <utility>
#include <vector>

#include "complements/errors.hpp"
#include "complements/hyperstandard.hpp"
#include "complements/rat.hpp"
#include "complements/rounding.hpp"

namespace complements {

struct AdjunctionConstants {
    Rat r;
    Int l;

    AdjunctionConstants(Rat r_, Int l_) : r(std::move(r_)), l(std::move(l_)) {
        if (r > 1) throw domain_error("bad-constants", "adjunction constant r must be <= 1");
        if (l <= 0) throw domain_error("bad-constants", "adjunction constant l must be positive");
    }
};

inline Rat adjunction_direct(const AdjunctionConstants& c, const Rat& b) {
    return Rat(1) - c.r / Rat(c.l) + b / Rat(c.l);
}

inline Rat adjunction_inverse(const AdjunctionConstants& c, const Rat& d) {
    return c.r - Rat(c.l) + Rat(c.l) * d;
}

// Transport of presentations: for families R'' (of r-constants) and R,
// R' = { r' - l(1-r) >= 0 : r in R'', r' in R, l >= 1 }. For every
// (r, l) with r in R'' and every b in Gamma(N, Phi(R)) with b <= r, the
// direct map carries b into Gamma(N, Phi(R')).
inline std::vector<Rat> transport_hyperstandard(const std::vector<Rat>& r_family,
                                                const std::vector<Rat>& r_set) {
    auto check = [](const std::vector<Rat>& v, const char* name) {
        bool has_one = false;
        for (const Rat& x : v) {
            if (x < 0 || x > 1)
                throw domain_error("bad-spec",
                                   std::string("transport_hyperstandard: ") + name + " not in [0,1]");
            has_one = has_one || x == 1;
        }
        if (!has_one)
            throw domain_error("bad-spec",
                               std::string("transport_hyperstandard: 1 missing from ") + name);
    };
    check(r_family, "R''");
    check(r_set, "R");

    std::set<Rat> out;
    for (const Rat& r : r_family) {
        Rat drop = Rat(1) - r;
        for (const Rat& rp : r_set) {
            if (drop == 0) {
                out.insert(rp);
                continue;
            }
            for (Int l = 1; rp - Rat(l) * drop >= 0; ++l) out.insert(rp - Rat(l) * drop);
        }
    }
    return std::vector<Rat>(out.begin(), out.end());
}

// The n_Phi inequality: with 0 <= b1 <= r and d' >= (d1)_{n_Phi'} for
// d1 = direct(b1), it always holds that (b1)_{n_Phi} <= inverse(d').
// Exposed as a checked predicate; preconditions are validated eagerly.
inline bool n_phi_inequality_check(const AdjunctionConstants& c, const Int& n, const Rat& b1,
                                   const Rat& dprime, const HyperstandardSpec& spec_phi,
                                   const HyperstandardSpec& spec_phi_prime) {
    if (b1 < 0 || b1 > c.r)
        throw domain_error("precondition", "n_phi_inequality_check: need 0 <= b1 <= r");
    HyperstandardSpec phi(spec_phi.R, {n}, spec_phi.abridged);
    HyperstandardSpec phi_prime(spec_phi_prime.R, {n}, spec_phi_prime.abridged);
    Rat d1 = adjunction_direct(c, b1);
    Rat d1_low = low_approximation(phi_prime, d1);
    if (dprime < d1_low)
        throw domain_error("precondition", "n_phi_inequality_check: d' = " + dprime.str() +
                                               " is below the low approximation " + d1_low.str());
    return low_approximation(phi, b1) <= adjunction_inverse(c, dprime);
}

// Main inequality: for nr integral, r <= 1,
//     r - l + l*floor((n+1)d)/n >= floor((n+1)(r - l + l d))/n.
inline bool main_inequality_check(const Int& n, const Int& l, const Rat& d, const Rat& r) {
    if (n <= 0 || l <= 0)
        throw domain_error("bad-index", "main_inequality_check: n, l must be positive");
    if (!is_integral_multiple(r, n))
        throw domain_error("non-integral-nr", "main_inequality_check: nr not integral");
    if (r > 1) throw domain_error("precondition", "main_inequality_check: need r <= 1");
    Rat lhs = r - Rat(l) + Rat(l) * Rat(((d * Rat(n + 1)).floor()), n);
    Rat rhs = Rat((((r - Rat(l) + Rat(l) * d) * Rat(n + 1)).floor()), n);
    return lhs >= rhs;
}

// Inverse rdn-monotonicity: for d <= 1 returns (rdn(b, n), b^[n]) where
// b = inverse(d) and b^[n] = inverse(rdn(d, n)); the first never exceeds
// the second.
inline std::pair<Rat, Rat> inverse_rdn_monotonicity(const AdjunctionConstants& c, const Int& n,
                                                    const Rat& d) {
    if (n <= 0) throw domain_error("bad-index", "inverse_rdn_monotonicity: n must be positive");
    if (!is_integral_multiple(c.r, n))
        throw domain_error("non-integral-nr", "inverse_rdn_monotonicity: nr not integral");
    if (d > 1) throw domain_error("precondition", "inverse_rdn_monotonicity: need d <= 1");
    Rat b = adjunction_inverse(c, d);
    return {rdn(b, n), adjunction_inverse(c, rdn(d, n))};
}

}  // namespace complements
