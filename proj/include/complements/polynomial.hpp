#pragma once

// Univariate polynomials over Q: exact arithmetic, Yun's squarefree
// decomposition, and full factorization into irreducibles over Q
// (squarefree part factored by the classical modular route: factor mod a
// small prime, Hensel lift, recombine against the Mignotte bound).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "complements/errors.hpp"
#include "complements/rat.hpp"

namespace complements {

using Poly = std::vector<Rat>;   // coefficient i belongs to x^i; no trailing zeros
using IPoly = std::vector<Int>;  // integer polynomials, same layout

namespace poly {

inline void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
inline int degree(const IPoly& f) { return static_cast<int>(f.size()) - 1; }

inline bool is_zero(const Poly& f) { return f.empty(); }

inline Poly add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    normalize(a);
    return a;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    normalize(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly scale(Poly a, const Rat& c) {
    for (Rat& x : a) x *= c;
    normalize(a);
    return a;
}

// Euclidean division over Q; returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.empty()) throw domain_error("zero-polynomial", "polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        normalize(a);
    }
    normalize(q);
    return {q, a};
}

inline Poly derivative(const Poly& f) {
    Poly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * Rat(Int(i)));
    normalize(out);
    return out;
}

inline Poly monic(Poly f) {
    if (f.empty()) return f;
    Rat lc = f.back();
    for (Rat& c : f) c /= lc;
    return f;
}

inline Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// Yun's squarefree decomposition: f = unit * prod part_i ^ i with the
// parts squarefree, pairwise coprime and monic.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (is_zero(f)) throw domain_error("zero-polynomial", "squarefree decomposition of 0");
    std::vector<std::pair<Poly, int>> parts;
    Poly g = monic(f);
    if (degree(g) == 0) return parts;
    Poly gp = derivative(g);
    Poly a = gcd(g, gp);
    Poly b = divmod(g, a).first;
    Poly c = divmod(gp, a).first;
    Poly d = sub(c, derivative(b));
    for (int i = 1; degree(b) > 0; ++i) {
        Poly ai = gcd(b, d);
        if (degree(ai) > 0) parts.emplace_back(ai, i);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = sub(c, derivative(b));
    }
    return parts;
}

// --- integer polynomial helpers -------------------------------------

inline Int content(const IPoly& f) {
    Int g = 0;
    for (const Int& c : f) g = boost::multiprecision::gcd(g, c);
    return g;
}

// primitive integer polynomial with positive leading coefficient; also
// returns the rational unit u with input = u * output
inline std::pair<Rat, IPoly> primitive_part(const Poly& f) {
    if (is_zero(f)) return {Rat(0), {}};
    Int den = 1;
    for (const Rat& c : f) den = boost::multiprecision::lcm(den, Int(c.denominator()));
    IPoly z;
    for (const Rat& c : f) z.push_back(Int((c * Rat(den)).numerator()));
    Int cont = content(z);
    if (z.back() < 0) cont = -cont;
    for (Int& c : z) c /= cont;
    return {Rat(cont, den), z};
}

inline Poly to_rational(const IPoly& f) {
    Poly out;
    for (const Int& c : f) out.push_back(Rat(c));
    return out;
}

// Exact division test in Z[x] for a monic divisor; nullopt if not divisible.
inline std::optional<IPoly> exact_divide(IPoly a, const IPoly& b) {
    if (b.empty() || b.back() != 1) throw domain_error("internal", "exact_divide wants monic divisor");
    IPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size()) {
        Int c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) return std::nullopt;
    return q;
}

namespace modular {

// F_p[x] arithmetic with p a small odd prime; coefficients in [0, p).
using MPoly = std::vector<std::int64_t>;

inline int degree(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

inline void mnormalize(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline MPoly mmul(const MPoly& a, const MPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
    mnormalize(out);
    return out;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

inline MPoly mrem(MPoly a, const MPoly& b, std::int64_t p) {
    std::int64_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::int64_t c = static_cast<std::int64_t>(static_cast<__int128>(a.back()) * inv % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - static_cast<__int128>(c) * b[i]) % p + p) % p;
        mnormalize(a);
    }
    return a;
}

inline MPoly mgcd(MPoly a, MPoly b, std::int64_t p) {
    while (!b.empty()) {
        MPoly r = mrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::int64_t>(static_cast<__int128>(c) * inv % p);
    }
    return a;
}

inline MPoly mpowmod(MPoly base, Int e, const MPoly& mod, std::int64_t p) {
    MPoly result{1};
    base = mrem(std::move(base), mod, p);
    while (e > 0) {
        if ((e & 1) != 0) result = mrem(mmul(result, base, p), mod, p);
        base = mrem(mmul(base, base, p), mod, p);
        e >>= 1;
    }
    return result;
}

inline MPoly mderiv(const MPoly& f, std::int64_t p) {
    MPoly out;
    for (std::size_t i = 1; i < f.size(); ++i)
        out.push_back(static_cast<std::int64_t>(static_cast<__int128>(f[i]) * (i % p) % p));
    mnormalize(out);
    return out;
}

// Exact division over F_p (the divisor is known to divide).
inline MPoly mdiv(const MPoly& a, const MPoly& b, std::int64_t p) {
    MPoly q, r = a;
    std::int64_t inv = inv_mod(b.back(), p);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
    while (r.size() >= b.size()) {
        std::int64_t c = static_cast<std::int64_t>(static_cast<__int128>(r.back()) * inv % p);
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = ((r[shift + i] - static_cast<__int128>(c) * b[i]) % p + p) % p;
        mnormalize(r);
    }
    mnormalize(q);
    return q;
}

// Distinct-degree + equal-degree (Cantor-Zassenhaus) factorization of a
// squarefree monic polynomial over F_p, p odd. Deterministically seeded.
inline std::vector<MPoly> mfactor_squarefree(const MPoly& f, std::int64_t p) {
    std::vector<MPoly> out;
    std::vector<std::pair<MPoly, int>> stages;  // (product of degree-d factors, d)
    MPoly v = f, h{0, 1};                       // h tracks x^(p^d) mod v
    for (int d = 1; 2 * d <= degree(v); ++d) {
        h = mpowmod(std::move(h), Int(p), v, p);
        MPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % p + p) % p;
        mnormalize(hx);
        MPoly g = mgcd(v, hx, p);
        if (degree(g) > 0) {
            stages.emplace_back(g, d);
            v = mdiv(v, g, p);
            h = mrem(std::move(h), v, p);
        }
    }
    if (degree(v) > 0) stages.emplace_back(v, degree(v));

    std::uint64_t lcg = 0x2545F4914F6CDD1Dull ^ static_cast<std::uint64_t>(p);
    auto next_rand = [&lcg]() {
        lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
        return lcg >> 16;
    };
    for (auto& [prod, d] : stages) {
        std::vector<MPoly> work{prod};
        while (!work.empty()) {
            MPoly cur = work.back();
            work.pop_back();
            if (degree(cur) == d) {
                out.push_back(cur);
                continue;
            }
            // random split
            MPoly r(static_cast<std::size_t>(2 * d), 0);
            for (auto& c : r) c = static_cast<std::int64_t>(next_rand() % static_cast<std::uint64_t>(p));
            mnormalize(r);
            if (degree(r) < 1) {
                work.push_back(cur);
                continue;
            }
            Int e = (boost::multiprecision::pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
            MPoly w = mpowmod(r, e, cur, p);
            if (!w.empty()) w[0] = (w[0] - 1 % p + p) % p;
            mnormalize(w);
            MPoly g = mgcd(cur, w, p);
            if (degree(g) <= 0 || degree(g) == degree(cur)) {
                work.push_back(cur);
                continue;
            }
            work.push_back(g);
            work.push_back(mdiv(cur, g, p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modular

// --- Hensel lifting (monic) ------------------------------------------

namespace hensel {

inline IPoly reduce(const IPoly& f, const Int& m) {
    IPoly out;
    for (const Int& c : f) {
        Int r = c % m;
        if (r < 0) r += m;
        out.push_back(r);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline IPoly center(const IPoly& f, const Int& m) {
    IPoly out = reduce(f, m);
    for (Int& c : out)
        if (2 * c > m) c -= m;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline IPoly imul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline IPoly iadd(IPoly a, const IPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline IPoly isub(IPoly a, const IPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// divmod by a monic polynomial, coefficients taken mod m
inline std::pair<IPoly, IPoly> mdivmod(IPoly a, const IPoly& b, const Int& m) {
    a = reduce(a, m);
    IPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size()) {
        Int c = a.back() % m;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] - c * b[i]) % m;
        }
        while (!a.empty() && a.back() % m == 0) a.pop_back();
    }
    return {reduce(q, m), reduce(a, m)};
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
// with g, h monic, to the same data mod m^2.
struct Pair {
    IPoly g, h, s, t;
};

inline Pair hensel_step(const IPoly& f, Pair in, const Int& m) {
    Int m2 = m * m;
    auto mod2 = [&](const IPoly& x) { return reduce(x, m2); };
    IPoly e = mod2(isub(f, imul(in.g, in.h)));
    auto [q, r] = mdivmod(imul(in.s, e), in.h, m2);
    IPoly g2 = mod2(iadd(iadd(in.g, imul(in.t, e)), imul(q, in.g)));
    IPoly h2 = mod2(iadd(in.h, r));
    IPoly b = mod2(isub(iadd(imul(in.s, g2), imul(in.t, h2)), IPoly{1}));
    auto [c, d] = mdivmod(imul(in.s, b), h2, m2);
    IPoly s2 = mod2(isub(in.s, d));
    IPoly t2 = mod2(isub(in.t, iadd(imul(in.t, b), imul(c, g2))));
    return {g2, h2, s2, t2};
}

// Bezout cofactors for coprime monic g, h over F_p.
inline std::pair<IPoly, IPoly> bezout_mod_p(const IPoly& g, const IPoly& h, std::int64_t p) {
    using modular::MPoly;
    auto to_m = [&](const IPoly& f) {
        MPoly out;
        for (const Int& c : f) {
            Int r = c % p;
            if (r < 0) r += p;
            out.push_back(static_cast<std::int64_t>(r));
        }
        modular::mnormalize(out);
        return out;
    };
    // extended Euclid over F_p[x]
    MPoly r0 = to_m(g), r1 = to_m(h);
    MPoly s0{1}, s1{}, t0{}, t1{1};
    auto maddsc = [&](const MPoly& a, const MPoly& b, const MPoly& q) {
        // a - q*b mod p
        MPoly qb = modular::mmul(q, b, p);
        MPoly out = a;
        if (out.size() < qb.size()) out.resize(qb.size(), 0);
        for (std::size_t i = 0; i < qb.size(); ++i) out[i] = ((out[i] - qb[i]) % p + p) % p;
        modular::mnormalize(out);
        return out;
    };
    while (!r1.empty()) {
        // quotient of r0 by r1
        MPoly q, rem = r0;
        std::int64_t inv = modular::inv_mod(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size()) {
            std::int64_t c = static_cast<std::int64_t>(static_cast<__int128>(rem.back()) * inv % p);
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - static_cast<__int128>(c) * r1[i]) % p + p) % p;
            modular::mnormalize(rem);
        }
        modular::mnormalize(q);
        MPoly s2 = maddsc(s0, s1, q), t2 = maddsc(t0, t1, q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd, must be a nonzero constant
    if (r0.size() != 1)
        throw domain_error("internal", "hensel: factors not coprime mod p");
    std::int64_t inv = modular::inv_mod(r0[0], p);
    auto scale_to_i = [&](const MPoly& f) {
        IPoly out;
        for (auto c : f)
            out.push_back(Int(static_cast<std::int64_t>(static_cast<__int128>(c) * inv % p)));
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    return {scale_to_i(s0), scale_to_i(t0)};
}

// Lift a monic factorization f = prod(factors) mod p to mod p^e >= target
// by binary splitting. All polynomials monic; f monic over Z.
inline std::vector<IPoly> lift_factorization(const IPoly& f, std::vector<IPoly> factors,
                                             std::int64_t p, const Int& target) {
    if (factors.size() == 1) {
        IPoly out = f;  // the full lift of a single factor is f itself
        return {out};
    }
    std::size_t half = factors.size() / 2;
    IPoly g{1}, h{1};
    Int pp(p);
    for (std::size_t i = 0; i < half; ++i) g = reduce(imul(g, factors[i]), pp);
    for (std::size_t i = half; i < factors.size(); ++i) h = reduce(imul(h, factors[i]), pp);
    auto [s, t] = bezout_mod_p(g, h, p);
    Pair cur{g, h, s, t};
    Int m(p);
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m *= m;
    }
    // make the halves monic lifts of integer polys and recurse
    IPoly gl = center(cur.g, m), hl = center(cur.h, m);
    std::vector<IPoly> left(factors.begin(), factors.begin() + half);
    std::vector<IPoly> right(factors.begin() + half, factors.end());
    auto a = lift_factorization(gl, std::move(left), p, target);
    auto b = lift_factorization(hl, std::move(right), p, target);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace hensel

// Factor a monic squarefree integer polynomial into monic irreducibles.
inline std::vector<IPoly> factor_monic_squarefree(const IPoly& f) {
    int n = degree(f);
    if (n <= 0) return {};
    if (n == 1) return {f};

    static const std::int64_t primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                          37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                          79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                                          131, 137, 139, 149, 151, 157, 163, 167, 173, 179};
    std::int64_t p = 0;
    modular::MPoly fp;
    for (std::int64_t cand : primes) {
        modular::MPoly g;
        for (const Int& c : f) {
            Int r = c % cand;
            if (r < 0) r += cand;
            g.push_back(static_cast<std::int64_t>(r));
        }
        modular::mnormalize(g);
        if (modular::degree(g) != n) continue;  // lc vanished (cannot happen: monic)
        modular::MPoly gp = modular::mderiv(g, cand);
        if (gp.empty()) continue;
        if (modular::degree(modular::mgcd(g, gp, cand)) == 0) {
            p = cand;
            fp = g;
            break;
        }
    }
    if (p == 0)
        throw domain_error("internal", "no usable prime for factorization (degree too large?)");

    auto mod_factors = modular::mfactor_squarefree(fp, p);
    if (mod_factors.size() == 1) return {f};

    // Mignotte-style bound on factor coefficients of a monic polynomial.
    Int maxc = 0;
    for (const Int& c : f) maxc = std::max(maxc, boost::multiprecision::abs(c));
    Int bound = (boost::multiprecision::pow(Int(2), static_cast<unsigned>(n + 1))) * Int(n + 1) * maxc;
    Int target = 2 * bound + 1;

    std::vector<IPoly> lifted;
    {
        std::vector<IPoly> seeds;
        for (const auto& mf : mod_factors) {
            IPoly s;
            for (auto c : mf) s.push_back(Int(c));
            seeds.push_back(std::move(s));
        }
        lifted = hensel::lift_factorization(f, std::move(seeds), p, target);
    }
    Int modulus(p);
    while (modulus < target) modulus *= modulus;

    // subset recombination
    std::vector<IPoly> result;
    IPoly rem = f;
    std::vector<int> alive(lifted.size(), 1);
    std::size_t alive_count = lifted.size();
    for (std::size_t take = 1; 2 * take <= alive_count;) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) idx.push_back(i);
        bool found = false;
        std::vector<std::size_t> comb(take);
        auto try_combinations = [&](auto&& self, std::size_t pos, std::size_t start) -> bool {
            if (pos == take) {
                IPoly cand{1};
                for (std::size_t j : comb) cand = hensel::reduce(hensel::imul(cand, lifted[j]), modulus);
                cand = hensel::center(cand, modulus);
                if (cand.empty() || cand.back() != 1) return false;
                auto q = exact_divide(rem, cand);
                if (!q) return false;
                result.push_back(cand);
                rem = *q;
                for (std::size_t j : comb) alive[j] = 0;
                alive_count -= take;
                return true;
            }
            for (std::size_t i = start; i < idx.size(); ++i) {
                comb[pos] = idx[i];
                if (self(self, pos + 1, i + 1)) return true;
            }
            return false;
        };
        found = try_combinations(try_combinations, 0, 0);
        if (!found) ++take;
    }
    if (degree(rem) > 0) result.push_back(rem);
    std::sort(result.begin(), result.end());
    return result;
}

// Full factorization over Q: f = unit * prod (primitive positive-lc
// irreducible integer polynomial)^multiplicity.
struct Factorization {
    Rat unit;
    std::vector<std::pair<IPoly, int>> factors;  // sorted by (degree, coeffs)
};

inline Factorization factor(const Poly& f_in) {
    Poly f = f_in;
    normalize(f);
    if (is_zero(f)) throw domain_error("zero-polynomial", "factor: zero polynomial");
    Factorization out;
    if (degree(f) == 0) {
        out.unit = f[0];
        return out;
    }

    for (auto& [part, mult] : squarefree_decomposition(f)) {
        IPoly z = primitive_part(part).second;
        Int lc = z.back();
        std::vector<IPoly> irreducibles;
        if (lc == 1) {
            irreducibles = factor_monic_squarefree(z);
        } else {
            // monic transformation: F(x) = lc^(n-1) z(x/lc) is monic over Z
            int n = degree(z);
            IPoly F(z.size());
            for (int i = 0; i < n; ++i)
                F[static_cast<std::size_t>(i)] =
                    z[static_cast<std::size_t>(i)] *
                    boost::multiprecision::pow(lc, static_cast<unsigned>(n - 1 - i));
            F[static_cast<std::size_t>(n)] = 1;
            for (const auto& Fi : factor_monic_squarefree(F)) {
                // back-substitute: the factor of z is the primitive part of Fi(lc x)
                Poly gi;
                Int power = 1;
                for (std::size_t i = 0; i < Fi.size(); ++i) {
                    gi.push_back(Rat(Fi[i] * power));
                    power *= lc;
                }
                normalize(gi);
                irreducibles.push_back(primitive_part(gi).second);
            }
        }
        for (auto& g : irreducibles) out.factors.emplace_back(std::move(g), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const std::pair<IPoly, int>& a, const std::pair<IPoly, int>& b) {
                  if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    // recover the exact unit: f = unit * prod factors^mult
    Poly prod{Rat(1)};
    for (const auto& [g, m] : out.factors)
        for (int i = 0; i < m; ++i) prod = mul(prod, to_rational(g));
    auto [q, r] = divmod(f, prod);
    if (!r.empty() || degree(q) != 0)
        throw domain_error("internal", "factorization does not multiply back");
    out.unit = q[0];
    return out;
}

inline std::string to_string(const IPoly& f) {
    if (f.empty()) return "0";
    std::string s;
    for (int i = degree(f); i >= 0; --i) {
        const Int& c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = boost::multiprecision::abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? "-" : "+";
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) s += a.str();
        if (i > 0) {
            if (show_coeff) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace poly
}  // namespace complements
