#pragma once

// Small exact linear algebra: reduced row echelon form over the rationals
// and Smith normal form over the integers. Dimensions here are tiny (the
// ambient dimension of an index problem), so classical elimination is fine.

#include <cstddef>
#include <vector>

#include "complements/errors.hpp"
#include "complements/rat.hpp"

namespace complements {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = m[row][col];
        for (auto& x : m[row]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);  // drop zero rows; rows are now a canonical basis
    return pivots;
}

// Coordinates of x in the row space of a RREF basis, or nullopt if x is
// not in the span.
inline std::optional<RatVec> coordinates_in_rref(const RatMat& basis,
                                                 const std::vector<std::size_t>& pivots,
                                                 RatVec x) {
    RatVec coords;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rat c = x[pivots[i]];
        coords.push_back(c);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= c * basis[i][j];
    }
    for (const Rat& r : x)
        if (r != 0) return std::nullopt;
    return coords;
}

// Smith-style diagonalization u * a * v = d with unimodular u, v. The
// diagonal is not normalized to a divisibility chain; that is not needed
// for lattice solving.
struct Smith {
    IntMat u, v, d;
    std::size_t rank = 0;
};

namespace detail {

inline IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace detail

inline Smith smith_normal_form(IntMat a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Smith s;
    s.u = detail::int_identity(rows);
    s.v = detail::int_identity(cols);
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] -= f * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[dst][j] -= f * s.u[src][j];
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= f * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.v[i][dst] -= f * s.v[i][src];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero entry of least magnitude in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (!found || boost::multiprecision::abs(a[i][j]) <
                                   boost::multiprecision::abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) {
            std::swap(a[pi], a[t]);
            std::swap(s.u[pi], s.u[t]);
        }
        if (pj != t) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);
            for (std::size_t i = 0; i < cols; ++i) std::swap(s.v[i][pj], s.v[i][t]);
        }
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) {
                row_op(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) {
                col_op(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // smaller remainders appeared; redo this pivot
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
        }
        ++t;
    }
    s.d = a;
    s.rank = t;
    return s;
}

}  // namespace complements
