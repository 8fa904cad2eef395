#pragma once

// The rounding operator behind n-complements and the predicates built
// from it. For a positive integer n,
//
//     rdn(x, n) = 1                      if x = 1,
//                 floor((n+1) x) / n     otherwise,
//
// with the exception applied exactly at x = 1, not in a neighborhood.

#include <vector>

#include "complements/errors.hpp"
#include "complements/multiplicity.hpp"
#include "complements/rat.hpp"

namespace complements {

inline Rat rdn(const Rat& x, const Int& n) {
    if (n <= 0) throw domain_error("bad-index", "rdn: n must be positive");
    if (x == 1) return Rat(1);
    return Rat(((x * Rat(n + 1)).floor()), n);
}

inline MultiplicityVector rdn_vector(const MultiplicityVector& d, const Int& n) {
    MultiplicityVector out;
    for (const auto& [label, value] : d.entries()) out.set(label, rdn(value, n));
    return out;
}

// The lower bound imposed on a complement multiplicity by condition (1):
// 1 when d = 1, rdn(d, n) otherwise. (Identical to rdn on [0,1].)
inline Rat condition1_threshold(const Rat& d, const Int& n) { return rdn(d, n); }

// Condition (1) of the n-complement definition at multiplicity level:
// for every label, d+ >= 1 when d = 1 and d+ >= floor((n+1)d)/n otherwise.
// Missing labels read as 0.
inline bool check_n_complement_condition1(const MultiplicityVector& b,
                                          const MultiplicityVector& bplus, const Int& n) {
    for (const auto& label : MultiplicityVector::joint_labels(b, bplus))
        if (bplus.get(label) < condition1_threshold(b.get(label), n)) return false;
    return true;
}

// Inverse stability: whether every B+ that satisfies condition (1) against
// B also satisfies it against D. Preconditions (each reported distinctly):
//   - B is a boundary,
//   - nD is integral,
//   - every positive entry of D is >= mu,
//   - for mu <= 1: ||D - B|| < delta/n with delta = mu n/(n+1);
//     for mu > 1 the entry bound forces D = 0 and no distance is required.
// Under these the answer is always true; it is still decided by the
// entrywise threshold comparison rather than assumed.
inline bool inverse_stability_transfer(const MultiplicityVector& b, const MultiplicityVector& d,
                                       const Int& n, const Rat& mu) {
    if (n <= 0) throw domain_error("bad-index", "inverse_stability_transfer: n must be positive");
    if (mu <= 0) throw domain_error("bad-mu", "inverse_stability_transfer: mu must be positive");
    if (!b.all_in_unit_interval())
        throw domain_error("not-boundary", "inverse_stability_transfer: B is not a boundary");

    auto labels = MultiplicityVector::joint_labels(b, d);
    for (const auto& label : labels) {
        Rat dv = d.get(label);
        if (!is_integral_multiple(dv, n))
            throw domain_error("non-integral-nD", "inverse_stability_transfer: n*D not integral at '" +
                                                      label + "' (" + dv.str() + ")");
        if (dv > 0 && dv < mu)
            throw domain_error("small-positive-entry",
                               "inverse_stability_transfer: positive entry " + dv.str() + " at '" +
                                   label + "' is below mu = " + mu.str());
    }
    if (mu > 1) {
        // Positive entries would have to exceed 1, so D = 0 is forced; the
        // transfer then holds against any boundary B by monotonicity and no
        // distance bound is needed.
        for (const auto& label : labels)
            if (d.get(label) != 0)
                throw domain_error("not-boundary",
                                   "inverse_stability_transfer: mu > 1 forces D = 0, got entry " +
                                       d.get(label).str() + " at '" + label + "'");
    } else {
        Rat delta = mu * Rat(n) / Rat(n + 1);
        Rat dist = max_norm_distance(d, b);
        if (!(dist < delta / Rat(n)))
            throw domain_error("distance-bound",
                               "inverse_stability_transfer: ||D-B|| = " + dist.str() +
                                   " not < delta/n = " + (delta / Rat(n)).str());
    }

    for (const auto& label : labels)
        if (condition1_threshold(d.get(label), n) > condition1_threshold(b.get(label), n))
            return false;
    return true;
}

// floor((n+c) b)/n for each n in n_list; approaches b as n grows, with
// |result - b| < (1 + |c b|)/n.
inline std::vector<Rat> limit_check(const Rat& b, const Rat& c, const std::vector<Int>& n_list) {
    std::vector<Rat> out;
    out.reserve(n_list.size());
    for (const Int& n : n_list) {
        if (n <= 0) throw domain_error("bad-index", "limit_check: n must be positive");
        out.emplace_back(((Rat(n) + c) * b).floor(), n);
    }
    return out;
}

}  // namespace complements
