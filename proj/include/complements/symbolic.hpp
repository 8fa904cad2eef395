#pragma once

// Vectors with irrational coordinates, given exactly as a rational part
// plus Q-linear combinations of declared symbols,
//
//     v = a0 + sum_j  xi_j * a_j,        a0, a_j in Q^l,
//
// where the xi_j are irrational numbers asserted to be Q-linearly
// independent together with 1, each carrying a rational interval
// enclosure. Exact sign decisions on the induced field of values are
// possible: a combination with a nonzero irrational part is never zero,
// so a sufficiently tight enclosure always decides its sign; if the given
// enclosure cannot, the computation reports enclosure-too-wide rather
// than guessing.

#include <string>
#include <utility>
#include <vector>

#include "complements/errors.hpp"
#include "complements/linalg.hpp"
#include "complements/rat.hpp"

namespace complements {

struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rat point) : lo(point), hi(point) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw domain_error("bad-interval", "interval endpoints out of order");
    }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    Interval operator-() const { return {-hi, -lo}; }
    Interval scaled(const Rat& f) const { return f >= 0 ? Interval{lo * f, hi * f} : Interval{hi * f, lo * f}; }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    Rat width() const { return hi - lo; }

    Interval abs() const {
        if (lo >= 0) return *this;
        if (hi <= 0) return -*this;
        return {Rat(0), max(-lo, hi)};
    }

    static Interval hull(const Interval& a, const Interval& b) {
        return {min(a.lo, b.lo), max(a.hi, b.hi)};
    }

    // Division by an interval certified away from zero.
    Interval divided_by(const Interval& d) const {
        if (d.contains(Rat(0)))
            throw domain_error("enclosure-too-wide", "interval division by an interval containing 0");
        Rat a = lo / d.lo, b = lo / d.hi, c = hi / d.lo, e = hi / d.hi;
        return {min(min(a, b), min(c, e)), max(max(a, b), max(c, e))};
    }
};

struct SymbolicVector {
    struct Term {
        std::string symbol;
        Interval enclosure;
        RatVec coeffs;
    };

    RatVec rational_part;
    std::vector<Term> terms;

    std::size_t dimension() const { return rational_part.size(); }

    bool is_rational() const {
        for (const auto& t : terms)
            for (const Rat& c : t.coeffs)
                if (c != 0) return false;
        return true;
    }

    void validate() const {
        for (const auto& t : terms) {
            if (t.coeffs.size() != dimension())
                throw domain_error("bad-vector", "coefficient vector of symbol '" + t.symbol +
                                                     "' has wrong dimension");
            for (const auto& u : terms)
                if (&t != &u && t.symbol == u.symbol)
                    throw domain_error("bad-vector", "duplicate symbol '" + t.symbol + "'");
        }
    }

    Interval coordinate_enclosure(std::size_t i) const {
        Interval out(rational_part[i]);
        for (const auto& t : terms) out = out + t.enclosure.scaled(t.coeffs[i]);
        return out;
    }
};

// A value in the Q-span of {1, xi_1, ..., xi_m}: c + sum_j g_j xi_j.
// Signs are exact for rational values; otherwise certified via the
// enclosures (a nonzero irrational value cannot be zero).
class SymReal {
public:
    SymReal(Rat c, RatVec g, const std::vector<SymbolicVector::Term>* terms)
        : c_(std::move(c)), g_(std::move(g)), terms_(terms) {}

    static SymReal constant(Rat c, const std::vector<SymbolicVector::Term>* terms) {
        return SymReal(std::move(c), RatVec(terms->size(), Rat(0)), terms);
    }

    // The i-th coordinate of x - v for rational x.
    static SymReal coordinate_difference(const Rat& x, const SymbolicVector& v, std::size_t i) {
        RatVec g;
        for (const auto& t : v.terms) g.push_back(-t.coeffs[i]);
        return SymReal(x - v.rational_part[i], std::move(g), &v.terms);
    }

    bool is_rational() const {
        for (const Rat& g : g_)
            if (g != 0) return false;
        return true;
    }

    const Rat& rational_const() const { return c_; }

    SymReal operator+(const SymReal& o) const {
        RatVec g = g_;
        for (std::size_t j = 0; j < g.size(); ++j) g[j] += o.g_[j];
        return SymReal(c_ + o.c_, std::move(g), terms_);
    }
    SymReal operator-(const SymReal& o) const {
        RatVec g = g_;
        for (std::size_t j = 0; j < g.size(); ++j) g[j] -= o.g_[j];
        return SymReal(c_ - o.c_, std::move(g), terms_);
    }
    SymReal operator-() const {
        RatVec g = g_;
        for (Rat& x : g) x = -x;
        return SymReal(-c_, std::move(g), terms_);
    }
    SymReal scaled(const Rat& f) const {
        RatVec g = g_;
        for (Rat& x : g) x *= f;
        return SymReal(c_ * f, std::move(g), terms_);
    }

    Interval enclosure() const {
        Interval out(c_);
        for (std::size_t j = 0; j < g_.size(); ++j)
            out = out + (*terms_)[j].enclosure.scaled(g_[j]);
        return out;
    }

    // Exact sign; throws enclosure-too-wide when the enclosures cannot
    // separate an irrational value from 0.
    int sign() const {
        if (is_rational()) return c_.sign();
        Interval e = enclosure();
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        throw domain_error("enclosure-too-wide",
                           "symbol enclosures too wide to decide a sign; tighten them");
    }

    SymReal abs() const { return sign() >= 0 ? *this : -*this; }

    friend int compare(const SymReal& a, const SymReal& b) { return (a - b).sign(); }

private:
    Rat c_;
    RatVec g_;
    const std::vector<SymbolicVector::Term>* terms_;
};

struct RationalSpan {
    RatVec basepoint;        // canonical representative (pivot coordinates zeroed)
    RatMat directions;       // canonical RREF basis rows of the direction space
    std::vector<std::size_t> pivots;

    std::size_t dimension() const { return directions.size(); }

    bool contains(RatVec x) const {
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= basepoint[j];
        return coordinates_in_rref(directions, pivots, x).has_value();
    }
};

// The smallest rational affine subspace containing v: basepoint a0 reduced
// to canonical form plus the RREF basis of span_Q{a_j}. Presentations of
// the same vector yield literally equal output.
inline RationalSpan rational_span(const SymbolicVector& v) {
    v.validate();
    RationalSpan out;
    RatMat rows;
    for (const auto& t : v.terms) rows.push_back(t.coeffs);
    out.pivots = rref(rows);
    out.directions = rows;
    out.basepoint = v.rational_part;
    for (std::size_t i = 0; i < out.directions.size(); ++i) {
        Rat c = out.basepoint[out.pivots[i]];
        for (std::size_t j = 0; j < out.basepoint.size(); ++j)
            out.basepoint[j] -= c * out.directions[i][j];
    }
    return out;
}

}  // namespace complements
