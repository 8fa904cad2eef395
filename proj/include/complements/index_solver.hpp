#pragma once

// Restrictions on complementary indices: given (I, eps, v, e), find the
// smallest n = I q within budget admitting a rational v_n in the rational
// affine span of v with
//
//   Divisibility:   I | n
//   Denominators:   n v_n integral
//   Approximation:  ||v_n - v|| < eps/n          (max-abs norm)
//   Anisotropic:    ||(v_n - v)/||v_n - v|| - e|| < eps    (when e given)
//
// Every returned solution carries interval certificates and has passed an
// exact/certified re-verification of all four conditions. The search is
// deterministic: q increases, candidate points are ordered by certified
// distance (to v, or to v + delta e when a direction is given) with
// lexicographic tie-break.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "complements/errors.hpp"
#include "complements/lattice.hpp"
#include "complements/linalg.hpp"
#include "complements/rat.hpp"
#include "complements/symbolic.hpp"

namespace complements {

struct IndexProblem {
    Int I;
    Rat eps;
    SymbolicVector v;
    std::optional<RatVec> direction;  // e, rational, in the span's direction space, max-norm 1

    void validate() const {
        if (I <= 0) throw domain_error("bad-problem", "index problem: I must be positive");
        if (eps <= 0) throw domain_error("bad-problem", "index problem: eps must be positive");
        v.validate();
        if (v.dimension() == 0) throw domain_error("bad-problem", "index problem: empty vector");
        if (direction) {
            if (v.is_rational())
                throw domain_error("bad-direction",
                                   "rational v admits no direction; omit e");
            if (direction->size() != v.dimension())
                throw domain_error("bad-direction", "direction has wrong dimension");
            RationalSpan span = rational_span(v);
            RatVec e = *direction;
            if (!coordinates_in_rref(span.directions, span.pivots, e))
                throw domain_error("bad-direction",
                                   "direction does not lie in the span's direction space");
            Rat norm = 0;
            for (const Rat& x : e) norm = max(norm, abs(x));
            if (norm != 1)
                throw domain_error("bad-direction", "direction must have max-abs norm 1, got " +
                                                        norm.str());
        }
    }
};

struct ConditionCertificate {
    std::string condition;
    std::string statement;   // human-readable witnessed inequality / identity
    Interval value;          // certified enclosure of the left-hand side
    Rat bound;               // strict upper bound that was certified
};

struct IndexSolution {
    Int n;
    RatVec v_n;
    std::vector<ConditionCertificate> certificates;
};

namespace detail {

inline std::string vec_str(const RatVec& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].str();
    return s + ")";
}

// Max-abs distance between rational x and v as an exactly comparable value.
inline SymReal sym_distance(const RatVec& x, const SymbolicVector& v) {
    SymReal d = SymReal::coordinate_difference(x[0], v, 0).abs();
    for (std::size_t i = 1; i < x.size(); ++i) {
        SymReal di = SymReal::coordinate_difference(x[i], v, i).abs();
        if (compare(di, d) > 0) d = di;
    }
    return d;
}

// Enumerate all lattice points with ||x - v|| < eps/n. The box pulls back
// to a bounded integer box in lattice coordinates through the Gram matrix.
inline std::vector<RatVec> candidates_in_box(const AffineLattice& lat, const SymbolicVector& v,
                                             const Rat& radius) {
    std::size_t l = v.dimension(), k = lat.basis.size();
    std::vector<RatVec> out;
    if (k == 0) {
        out.push_back(lat.basepoint);
        return out;
    }

    // Gram matrix G = B B^T and rhs map s = G^{-1} B (x - x0).
    RatMat g(k, RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < l; ++t) g[i][j] += lat.basis[i][t] * lat.basis[j][t];
    // invert via RREF of [G | I]
    RatMat aug(k, RatVec(2 * k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = g[i][j];
        aug[i][k + i] = 1;
    }
    rref(aug);
    if (aug.size() != k)
        throw domain_error("bad-span", "degenerate lattice basis");
    RatMat ginv(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) ginv[i][j] = aug[i][k + j];

    // interval image of the box under s = Ginv B (x - x0)
    std::vector<Interval> diff;  // enclosure of v - x0, fattened by radius
    for (std::size_t i = 0; i < l; ++i)
        diff.push_back(v.coordinate_enclosure(i) - Interval(lat.basepoint[i]) +
                       Interval(-radius, radius));
    std::vector<Interval> srange(k, Interval(Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        Interval acc(Rat(0));
        for (std::size_t t = 0; t < l; ++t) {
            Rat coef = 0;
            for (std::size_t j = 0; j < k; ++j) coef += ginv[i][j] * lat.basis[j][t];
            acc = acc + diff[t].scaled(coef);
        }
        srange[i] = acc;
    }

    std::vector<Int> lo(k), hi(k);
    Int total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        lo[i] = srange[i].lo.ceil();
        hi[i] = srange[i].hi.floor();
        if (hi[i] < lo[i]) return out;
        total *= hi[i] - lo[i] + 1;
        if (total > 1 << 20)
            throw domain_error("window-too-large",
                               "the approximation window holds over 2^20 lattice points; "
                               "eps is far larger than the lattice spacing");
    }

    std::vector<Int> s(k);
    auto emit = [&](auto&& self, std::size_t idx) -> void {
        if (idx == k) {
            RatVec x = lat.basepoint;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t t = 0; t < l; ++t) x[t] += Rat(s[i]) * lat.basis[i][t];
            out.push_back(std::move(x));
            return;
        }
        for (Int z = lo[idx]; z <= hi[idx]; ++z) {
            s[idx] = z;
            self(self, idx + 1);
        }
    };
    emit(emit, 0);
    return out;
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

}  // namespace detail

inline IndexSolution solve_index_problem(const IndexProblem& problem, const Int& budget) {
    problem.validate();
    if (budget < problem.I)
        throw budget_error("budget-exhausted", "budget " + budget.str() + " is below I");

    const SymbolicVector& v = problem.v;
    RationalSpan span = rational_span(v);
    bool any_lattice = false;
    Int tried = 0, last_n = 0;

    for (Int n = problem.I; n <= budget; n += problem.I) {
        ++tried;
        last_n = n;
        AffineLattice lat = lattice_points_in_span(span, n);
        if (lat.empty) continue;
        any_lattice = true;

        Rat radius = problem.eps / Rat(n);
        auto candidates = detail::candidates_in_box(lat, v, radius);

        // certified filter on the approximation condition
        std::vector<RatVec> admissible;
        for (auto& x : candidates) {
            SymReal dist = detail::sym_distance(x, v);
            if (compare(dist, SymReal::constant(radius, &v.terms)) < 0)
                admissible.push_back(std::move(x));
        }
        if (admissible.empty()) continue;

        // order: by distance to the target (v, or v + delta e), lex tie-break
        std::vector<Rat> target_shift(v.dimension(), Rat(0));
        if (problem.direction) {
            Rat delta = radius / Rat(2);
            for (std::size_t i = 0; i < v.dimension(); ++i)
                target_shift[i] = delta * (*problem.direction)[i];
        }
        auto target_dist = [&](const RatVec& x) {
            SymReal d = (SymReal::coordinate_difference(x[0] - target_shift[0], v, 0)).abs();
            for (std::size_t i = 1; i < x.size(); ++i) {
                SymReal di = (SymReal::coordinate_difference(x[i] - target_shift[i], v, i)).abs();
                if (compare(di, d) > 0) d = di;
            }
            return d;
        };
        std::sort(admissible.begin(), admissible.end(), [&](const RatVec& a, const RatVec& b) {
            int c = compare(target_dist(a), target_dist(b));
            if (c != 0) return c < 0;
            return detail::lex_less(a, b);
        });

        for (const RatVec& x : admissible) {
            IndexSolution sol;
            sol.n = n;
            sol.v_n = x;

            // independent re-verification of all four conditions
            if (n % problem.I != 0) continue;
            bool integral = true;
            for (const Rat& c : x) integral = integral && is_integral_multiple(c, n);
            if (!integral) continue;
            SymReal dist = detail::sym_distance(x, v);
            if (!(compare(dist, SymReal::constant(radius, &v.terms)) < 0)) continue;

            sol.certificates.push_back({"divisibility",
                                        "n = " + n.str() + " = " + (n / problem.I).str() + " * " +
                                            problem.I.str(),
                                        Interval(Rat(n)), Rat(0)});
            sol.certificates.push_back({"denominators",
                                        "n * v_n = " + detail::vec_str([&] {
                                            RatVec y = x;
                                            for (Rat& c : y) c *= Rat(n);
                                            return y;
                                        }()) + " is integral",
                                        Interval(Rat(0)), Rat(0)});
            sol.certificates.push_back({"approximation",
                                        "||v_n - v|| < eps/n = " + radius.str(),
                                        dist.enclosure(), radius});

            if (problem.direction) {
                const RatVec& e = *problem.direction;
                // u = v_n - v; need ||u/||u|| - e|| < eps, decided as
                // |u_i - e_i * s| < eps * s with s = ||u|| > 0.
                std::vector<SymReal> u;
                for (std::size_t i = 0; i < x.size(); ++i)
                    u.push_back(SymReal::coordinate_difference(x[i], v, i));
                SymReal s = u[0].abs();
                for (std::size_t i = 1; i < u.size(); ++i) {
                    SymReal a = u[i].abs();
                    if (compare(a, s) > 0) s = a;
                }
                bool ok = true;
                std::optional<Interval> witness_opt;
                for (std::size_t i = 0; i < u.size() && ok; ++i) {
                    SymReal lhs = (u[i] - s.scaled(e[i])).abs();
                    ok = compare(lhs, s.scaled(problem.eps)) < 0;
                    Interval wi = (u[i].enclosure() - s.enclosure().scaled(e[i]))
                                      .abs()
                                      .divided_by(s.enclosure());
                    if (!witness_opt)
                        witness_opt = wi;
                    else  // enclosure of a max: componentwise max of endpoints
                        witness_opt = Interval{max(witness_opt->lo, wi.lo), max(witness_opt->hi, wi.hi)};
                }
                if (!ok) continue;
                Interval witness = *witness_opt;
                sol.certificates.push_back({"anisotropic",
                                            "||(v_n - v)/||v_n - v|| - e|| < eps = " +
                                                problem.eps.str(),
                                            witness, problem.eps});
            }
            return sol;
        }
    }

    if (!any_lattice)
        throw budget_error("empty-lattice",
                           "no n <= " + budget.str() + " (multiples of " + problem.I.str() +
                               ", " + tried.str() + " tried) admits integral points in the span");
    throw budget_error("budget-exhausted",
                       "no certified v_n up to n = " + last_n.str() + " (" + tried.str() +
                           " indices tried); increase the budget");
}

}  // namespace complements
