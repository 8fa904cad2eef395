#pragma once

// The set { x in <v> : n x integral } for a rational affine span <v>.
// It is either empty or an affine lattice of the span's full rank,
// computed by integer normal-form reduction of the span's defining data.

#include <vector>

#include "complements/errors.hpp"
#include "complements/linalg.hpp"
#include "complements/rat.hpp"
#include "complements/symbolic.hpp"

namespace complements {

struct AffineLattice {
    bool empty = true;
    RatVec basepoint;   // one solution x0 (n x0 integral)
    RatMat basis;       // rows: lattice translations inside the direction space
};

inline AffineLattice lattice_points_in_span(const RationalSpan& span, const Int& n) {
    if (n <= 0) throw domain_error("bad-index", "lattice_points_in_span: n must be positive");
    AffineLattice out;
    std::size_t l = span.basepoint.size(), k = span.dimension();

    if (k == 0) {
        for (const Rat& c : span.basepoint)
            if (!is_integral_multiple(c, n)) return out;
        out.empty = false;
        out.basepoint = span.basepoint;
        return out;
    }

    // Clear denominators: with B the l x k matrix of direction columns,
    // solve (q n B) t == -q n p (mod q Z^l) over t in Q^k.
    Int q = 1;
    auto lcm_den = [&q](const Rat& r) {
        q = boost::multiprecision::lcm(q, Int(r.denominator()));
    };
    for (std::size_t j = 0; j < l; ++j) {
        lcm_den(Rat(n) * span.basepoint[j]);
        for (std::size_t i = 0; i < k; ++i) lcm_den(Rat(n) * span.directions[i][j]);
    }

    IntMat a(l, IntVec(k, 0));
    IntVec w(l);
    for (std::size_t j = 0; j < l; ++j) {
        Rat wj = Rat(q) * Rat(n) * span.basepoint[j];
        w[j] = wj.numerator();
        for (std::size_t i = 0; i < k; ++i) {
            Rat aij = Rat(q) * Rat(n) * span.directions[i][j];
            a[j][i] = aij.numerator();  // column i = direction i
        }
    }

    Smith nf = smith_normal_form(a);
    if (nf.rank != k)
        throw domain_error("bad-span", "lattice_points_in_span: direction basis is degenerate");

    // c = U w; rows beyond the rank force q | c_i, otherwise no solution.
    IntVec c(l, 0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) c[i] += nf.u[i][j] * w[j];
    for (std::size_t i = k; i < l; ++i)
        if (c[i] % q != 0) return out;

    // s0_i = -c_i / d_i, lattice steps (q / d_i) e_i; map back via t = V s.
    RatVec s0;
    for (std::size_t i = 0; i < k; ++i) s0.push_back(Rat(-c[i], nf.d[i][i]));

    auto apply_directions = [&](const RatVec& t) {
        RatVec x(l, Rat(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j) x[j] += t[i] * span.directions[i][j];
        return x;
    };
    auto v_times = [&](const RatVec& s) {
        RatVec t(k, Rat(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) t[i] += Rat(nf.v[i][j]) * s[j];
        return t;
    };

    out.empty = false;
    out.basepoint = apply_directions(v_times(s0));
    for (std::size_t j = 0; j < l; ++j) out.basepoint[j] += span.basepoint[j];
    for (std::size_t i = 0; i < k; ++i) {
        RatVec s(k, Rat(0));
        s[i] = Rat(q, nf.d[i][i]);
        out.basis.push_back(apply_directions(v_times(s)));
    }
    return out;
}

}  // namespace complements
