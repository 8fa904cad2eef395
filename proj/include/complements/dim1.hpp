#pragma once

// Complement theory on curves. For a pair (P^1, B = sum b_i P_i) with
// boundary multiplicities b_1 >= b_2 >= ... the engine decides existence
// of R- and n-complements, constructs complements explicitly,
//
//     B+ = Delta/n + sum_{b_i < 1} floor((n+1) b_i)/n P_i + sum_{b_i = 1} P_i,
//
// with Delta a reduced divisor of 2n - l n - sum floor((n+1)b_i) fresh
// general points, and classifies pairs into lc / generic / semiexceptional
// / exceptional type by low approximations along a filtration of
// hyperstandard sets. Genus-1 curves and local germs are the trivial
// cases. Thresholds (R-complement, log canonical) are exact linear
// programs in the multiplicities.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complements/errors.hpp"
#include "complements/hyperstandard.hpp"
#include "complements/multiplicity.hpp"
#include "complements/polynomial.hpp"
#include "complements/rat.hpp"
#include "complements/rounding.hpp"

namespace complements {

enum class CurveKind { rational, genus1, local_germ };

inline std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::rational: return "rational";
        case CurveKind::genus1: return "genus1";
        case CurveKind::local_germ: return "local_germ";
    }
    return "?";
}

struct CurvePair {
    CurveKind kind = CurveKind::rational;
    MultiplicityVector B;
    std::optional<Poly> poly;  // optional polynomial presentation (rational kind)

    void validate() const {
        if (!B.all_in_unit_interval())
            throw domain_error("not-boundary", "curve pair: multiplicities must lie in [0,1]");
    }
};

struct ComplementResult {
    bool exists = false;
    MultiplicityVector bplus;
    Int n = 0;
    std::optional<std::string> type_tag;        // classification of the source pair
    std::map<std::string, int> label_degrees;   // degree of each label's point (default 1)

    int degree_of(const std::string& label) const {
        auto it = label_degrees.find(label);
        return it == label_degrees.end() ? 1 : it->second;
    }

    // Degree-weighted total multiplicity of B+.
    Rat total() const {
        Rat s = 0;
        for (const auto& [label, value] : bplus.entries()) s += value * Rat(degree_of(label));
        return s;
    }
};

inline bool has_r_complement(const CurvePair& p) {
    p.validate();
    switch (p.kind) {
        case CurveKind::rational: return p.B.sum() <= 2;
        case CurveKind::genus1: return p.B.sum() == 0;
        case CurveKind::local_germ: return true;
    }
    return false;
}

// Existence of an n-complement. For the rational kind this is the
// inequality sum_{b_i < 1} floor((n+1)b_i)/n <= c - l with l the number of
// multiplicities equal to 1; c = 2 on P^1, c = d+1 for the variant with
// general hypersurfaces on P^d.
inline bool has_n_complement(const CurvePair& p, const Int& n, const Rat& c = Rat(2)) {
    p.validate();
    if (n <= 0) throw domain_error("bad-index", "has_n_complement: n must be positive");
    switch (p.kind) {
        case CurveKind::genus1: return p.B.sum() == 0;
        case CurveKind::local_germ: return true;
        case CurveKind::rational: break;
    }
    Int l = 0;
    Rat partial = 0;
    for (const auto& [label, value] : p.B.entries()) {
        if (value == 1)
            ++l;
        else
            partial += rdn(value, n);
    }
    if (Rat(l) > c) return false;
    return partial <= c - Rat(l);
}

// --- classification ----------------------------------------------------

struct FiltrationStep {
    std::vector<Int> indices;  // complementary indices attached to the level
    HyperstandardSpec spec;
};

// The worked dimension-1 filtration: Gamma({1}, {}) = {0, 1/2, 1} and
// Gamma({1,2}, {}) = {0, 1/3, 1/2, 2/3, 5/6, 1} in their abridged form.
inline std::vector<FiltrationStep> default_filtration() {
    return {
        {{Int(1)}, HyperstandardSpec({Rat(1)}, {Int(1)}, true)},
        {{Int(1), Int(2)}, HyperstandardSpec({Rat(1)}, {Int(1), Int(2)}, true)},
    };
}

struct ClassifyLevel {
    std::vector<Int> indices;
    MultiplicityVector approximation;
};

struct ClassifyResult {
    std::string type_tag;      // lc | generic | semiexceptional | exceptional
    std::string type_detail;   // "", "(0,0)" or "(-1,-)"
    std::vector<ClassifyLevel> approximations;
    std::vector<Int> complement_indices;      // verified against B itself
    std::optional<Int> self_complement_index; // least verified n with B+ = B
};

namespace detail {

inline std::string fresh_delta_label(const MultiplicityVector& taken, int k) {
    std::string label = "delta." + std::to_string(k);
    while (taken.has(label)) label = "_" + label;
    return label;
}

inline MultiplicityVector low_approximation_vector(const HyperstandardSpec& spec,
                                                   const MultiplicityVector& b) {
    MultiplicityVector out;
    for (const auto& [label, value] : b.entries()) out.set(label, low_approximation(spec, value));
    return out;
}

// Sum of all multiplicities except the largest.
inline Rat sum_below_top(const MultiplicityVector& b) {
    auto vs = b.sorted_values();
    Rat s = 0;
    for (std::size_t i = 1; i < vs.size(); ++i) s += vs[i];
    return s;
}

// The classification tree shared by classify() and the constructed-result
// tag: fills type, detail and witness levels; returns candidate indices.
inline std::vector<Int> classify_tree(const CurvePair& p,
                                      const std::vector<FiltrationStep>& filtration,
                                      ClassifyResult& out) {
    auto sorted = p.B.sorted_values();
    if (!sorted.empty() && sorted[0] == 1) {
        out.type_tag = "lc";
        return {Int(1), Int(2)};
    }

    auto level0 = low_approximation_vector(filtration[0].spec, p.B);
    out.approximations.push_back({filtration[0].indices, level0});

    if (sum_below_top(level0) < 1) {
        out.type_tag = "generic";
        return {Int(1)};
    }

    auto l0 = level0.sorted_values();
    if (l0.size() >= 4 && l0[3] >= Rat(1, 2)) {
        // forced configuration (1/2, 1/2, 1/2, 1/2): its own 2-complement
        out.type_tag = "semiexceptional";
        return {Int(2)};
    }

    const FiltrationStep& last = filtration.size() > 1 ? filtration[1] : filtration[0];
    if (filtration.size() > 1) {
        auto level1 = low_approximation_vector(last.spec, p.B);
        out.approximations.push_back({last.indices, level1});
    }
    if (sum_below_top(out.approximations.back().approximation) <= 1) {
        out.type_tag = "semiexceptional";
        out.type_detail = "(0,0)";
        return {Int(2)};
    }
    out.type_tag = "exceptional";
    out.type_detail = "(-1,-)";
    return {Int(3), Int(4), Int(6)};
}

}  // namespace detail

// Type tag alone, without complement search.
inline std::string classify_type_tag(const CurvePair& p,
                                     const std::vector<FiltrationStep>& filtration =
                                         default_filtration()) {
    ClassifyResult scratch;
    detail::classify_tree(p, filtration, scratch);
    return scratch.type_tag;
}

// --- construction --------------------------------------------------------

// Soundness of a constructed complement at multiplicity level: condition
// (1), degree-weighted total 2, nB+ integral, entries in [0,1].
inline void verify_complement(const MultiplicityVector& b, const ComplementResult& res) {
    if (!check_n_complement_condition1(b, res.bplus, res.n))
        throw domain_error("internal", "constructed complement violates condition (1)");
    if (res.total() != 2)
        throw domain_error("internal",
                           "constructed complement has total " + res.total().str() + " != 2");
    for (const auto& [label, value] : res.bplus.entries()) {
        if (value < 0 || value > 1)
            throw domain_error("internal", "constructed complement entry out of [0,1]");
        if (!is_integral_multiple(value, res.n))
            throw domain_error("internal", "constructed complement not integral over 1/n");
    }
}

inline ComplementResult construct_n_complement(const CurvePair& p, const Int& n) {
    p.validate();
    if (!has_n_complement(p, n))
        throw domain_error("no-complement", "pair has no " + n.str() + "-complement");
    ComplementResult res;
    res.exists = true;
    res.n = n;

    if (p.kind != CurveKind::rational) {
        // genus 1: B = 0 and B+ = 0; local germ: raise to the thresholds
        if (p.kind == CurveKind::genus1)
            res.bplus = MultiplicityVector();
        else
            res.bplus = rdn_vector(p.B, n);
        return res;
    }

    Int l = 0;
    Int kept_floor_sum = 0;
    for (const auto& [label, value] : p.B.entries()) {
        if (value == 1) {
            res.bplus.set(label, Rat(1));
            ++l;
        } else {
            res.bplus.set(label, rdn(value, n));
            kept_floor_sum += (value * Rat(n + 1)).floor();
        }
    }
    Int delta_points = 2 * n - l * n - kept_floor_sum;
    for (Int k = 1; k <= delta_points; ++k)
        res.bplus.set(detail::fresh_delta_label(res.bplus, static_cast<int>(k)), Rat(1, n));
    if (has_r_complement(p)) res.type_tag = classify_type_tag(p);
    verify_complement(p.B, res);
    return res;
}

inline ClassifyResult classify(const CurvePair& p,
                               const std::vector<FiltrationStep>& filtration = default_filtration()) {
    p.validate();
    if (p.kind != CurveKind::rational)
        throw domain_error("bad-kind", "classify expects the rational curve kind");
    if (!has_r_complement(p))
        throw domain_error("no-r-complement", "pair has no R-complement: total " + p.B.sum().str());
    if (filtration.empty()) throw domain_error("bad-filtration", "classify needs a filtration");

    ClassifyResult out;
    for (const Int& n : detail::classify_tree(p, filtration, out))
        if (has_n_complement(p, n)) out.complement_indices.push_back(n);
    for (const Int& n : out.complement_indices) {
        if (construct_n_complement(p, n).bplus == p.B) {
            out.self_complement_index = n;
            break;
        }
    }
    return out;
}

// --- thresholds ---------------------------------------------------------

// R-complement threshold of F against (X, B): the largest t >= 0 with
// (X, B + tF) still admitting an R-complement. On P^1 this is the exact
// minimum of the per-point caps (1 - b_i)/f_i and the degree bound
// (2 - sum B)/sum F; for a local germ only the caps constrain.
inline Rat rct_threshold(const CurvePair& p, const MultiplicityVector& f) {
    p.validate();
    if (!has_r_complement(p))
        throw domain_error("no-r-complement", "rct_threshold needs a pair with an R-complement");
    bool nonzero = false;
    for (const auto& [label, value] : f.entries()) {
        if (value < 0) throw domain_error("bad-divisor", "F must be effective");
        nonzero = nonzero || value > 0;
    }
    if (!nonzero) throw domain_error("bad-divisor", "F must be nonzero");

    if (p.kind == CurveKind::genus1) return Rat(0);

    std::optional<Rat> bound;
    auto cap = [&](const Rat& t) { bound = bound ? min(*bound, t) : t; };
    for (const auto& [label, value] : f.entries())
        if (value > 0) cap((Rat(1) - p.B.get(label)) / value);
    if (p.kind == CurveKind::rational) cap((Rat(2) - p.B.sum()) / f.sum());
    return *bound;
}

// Log canonical threshold of t*F at a smooth curve point carrying
// boundary multiplicity b: the cap (1 - b)/f.
inline Rat lct_smooth_point(const Rat& b, const Rat& f) {
    if (b < 0 || b > 1) throw domain_error("not-boundary", "lct: b must lie in [0,1]");
    if (f <= 0) throw domain_error("bad-divisor", "lct: f must be positive");
    return (Rat(1) - b) / f;
}

// --- polynomial presentation --------------------------------------------

// n-complements of (P^1, 0) are exactly B+ = (f)_0 / n for polynomials f
// of degree 2n whose roots all have multiplicity <= n. Accepts or rejects
// f accordingly; the returned vector is keyed by the irreducible factors,
// each carrying its residue degree.
inline ComplementResult polynomial_complement(const Poly& f, const Int& n) {
    if (n <= 0) throw domain_error("bad-index", "polynomial_complement: n must be positive");
    Poly g = f;
    poly::normalize(g);
    if (poly::is_zero(g)) throw domain_error("zero-polynomial", "polynomial_complement: f = 0");
    if (Rat(poly::degree(g)) != Rat(2) * Rat(n))
        throw domain_error("wrong-degree", "deg f = " + std::to_string(poly::degree(g)) +
                                               ", expected 2n = " + (2 * n).str());
    auto fac = poly::factor(g);
    for (const auto& [factor, mult] : fac.factors)
        if (Rat(mult) > Rat(n))
            throw domain_error("excessive-multiplicity",
                               "root multiplicity " + std::to_string(mult) + " of factor " +
                                   poly::to_string(factor) + " exceeds n = " + n.str());
    ComplementResult res;
    res.exists = true;
    res.n = n;
    res.type_tag = "generic";  // the source pair is (P^1, 0)
    for (const auto& [factor, mult] : fac.factors) {
        res.bplus.set(poly::to_string(factor), Rat(mult, n));
        res.label_degrees[poly::to_string(factor)] = poly::degree(factor);
    }
    verify_complement(MultiplicityVector(), res);
    return res;
}

}  // namespace complements
