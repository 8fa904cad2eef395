#pragma once

// Randomized property suites. Each suite draws instances from a seeded
// deterministic generator, stops at the first violation and reports it
// verbatim; reports are byte-identical for identical (seed, iterations).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "complements/adjunction.hpp"
#include "complements/dim1.hpp"
#include "complements/hyperstandard.hpp"
#include "complements/rng.hpp"
#include "complements/rounding.hpp"

namespace complements {

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    long long iterations = 0;
    long long checks = 0;
    bool passed = true;
    std::string counterexample;

    SuiteReport(std::string name_, std::uint64_t seed_, long long iterations_)
        : name(std::move(name_)), seed(seed_), iterations(iterations_) {}

    void require(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (!ok && passed) {
            passed = false;
            counterexample = describe();
        }
    }

    std::string summary() const {
        std::string s = "suite " + name + ": seed=" + std::to_string(seed) +
                        " iterations=" + std::to_string(iterations) +
                        " checks=" + std::to_string(checks) + " -> " +
                        (passed ? "PASS" : "FAIL");
        if (!passed) s += "\n  counterexample: " + counterexample;
        return s;
    }
};

// The elementary Gauss-bracket inequalities, approximation lemmas and the
// main inequality, on random exact-rational instances.
inline SuiteReport suite_inequalities(std::uint64_t seed, long long iterations) {
    SuiteReport rep{"inequalities", seed, iterations};
    Rng rng(seed);
    auto fl = [](const Rat& x) { return Rat(x.floor()); };

    for (long long it = 0; it < iterations && rep.passed; ++it) {
        {  // two basic bounds
            Rat a = rng.rational(60, 24), b = rng.rational(60, 24);
            rep.require(fl(a + b) <= fl(a) + fl(b) + Rat(1), [&] {
                return "basic upper bound at a=" + a.str() + " b=" + b.str();
            });
            rep.require(fl(a + b) >= fl(a) + fl(b), [&] {
                return "basic low bound at a=" + a.str() + " b=" + b.str();
            });
        }
        {  // inductive bounds
            int terms = static_cast<int>(rng.range(1, 5));
            Rat sum = 0, fsum = 0;
            std::string inst;
            for (int i = 0; i < terms; ++i) {
                Rat d = rng.rational(40, 16);
                inst += (i ? "," : "") + d.str();
                sum += d;
                fsum += fl(d);
            }
            rep.require(fl(sum) <= Rat(terms - 1) + fsum,
                        [&] { return "inductive upper bound at d=(" + inst + ")"; });
            rep.require(fl(sum) >= fsum,
                        [&] { return "inductive low bound at d=(" + inst + ")"; });
        }
        {  // corollary bounds for floor(n d)
            Int n = rng.range(1, 9);
            Rat d = rng.rational(40, 16);
            rep.require(fl(Rat(n) * d) <= Rat(n - 1) + Rat(n) * fl(d), [&] {
                return "floor(nd) upper bound at n=" + n.str() + " d=" + d.str();
            });
            rep.require(fl(Rat(n) * d) >= Rat(n) * fl(d), [&] {
                return "floor(nd) low bound at n=" + n.str() + " d=" + d.str();
            });
        }
        {  // special upper bound: r < 1, s r integral
            Int z = rng.range(-20, 0);
            Rat r = rng.rational(30, 15);
            if (r >= 1) r = Rat(1) - abs(r) - Rat(1, 7);
            if (r != 0) {
                Rat s = Rat(z) / r;
                rep.require(fl((s + Rat(1)) * r) <= Rat(z), [&] {
                    return "special upper bound at r=" + r.str() + " s=" + s.str();
                });
            }
        }
        {  // 1 - l + sum floor((n+1)d_i)/n >= floor((n+1)(1 - l + sum d_i))/n
            Int n = rng.range(1, 9);
            int l = static_cast<int>(rng.range(1, 4));
            Rat sum = 0, lhs = Rat(1 - l);
            std::string inst;
            for (int i = 0; i < l; ++i) {
                Rat d = rng.rational(30, 12);
                inst += (i ? "," : "") + d.str();
                sum += d;
                lhs += Rat((d * Rat(n + 1)).floor(), n);
            }
            Rat rhs((((Rat(1 - l) + sum) * Rat(n + 1)).floor()), n);
            rep.require(lhs >= rhs, [&] {
                return "joined rounding bound at n=" + n.str() + " d=(" + inst + ")";
            });
        }
        {  // main inequality with nr integral, r <= 1
            Int n = rng.range(1, 9);
            Int l = rng.range(1, 6);
            Rat r(Int(rng.range(-20, static_cast<long long>(n))), n);
            Rat d = rng.rational(30, 12);
            rep.require(main_inequality_check(n, l, d, r), [&] {
                return "main inequality at n=" + n.str() + " l=" + l.str() + " d=" + d.str() +
                       " r=" + r.str();
            });
        }
        {  // approximation lemma with divisor I | n
            Int I = rng.range(1, 6);
            Int n = I * rng.range(1, 8);
            Int l = rng.below(static_cast<std::uint64_t>(I));
            Rat target(l, I);
            Rat delta = Rat(1) / (Rat(I) * Rat(n + 1)) * rng.unit_rational(30) * Rat(9, 10);
            Rat b = rng.chance(1, 2) ? target + delta : target - delta;
            if (b >= 0 && b < 1)
                rep.require(rdn(b, n) == target, [&] {
                    return "approximation I at I=" + I.str() + " n=" + n.str() + " b=" + b.str();
                });
        }
        {  // approximation near 1
            Int n = rng.range(1, 30);
            Rat delta = Rat(1, n + 1) * rng.unit_rational(30) * Rat(99, 100);
            if (delta > 0)
                rep.require(rdn(Rat(1) - delta, n) == 1, [&] {
                    return "approximation II at n=" + n.str() + " delta=" + delta.str();
                });
        }
        {  // three-case estimate around m/n
            Int n = rng.range(1, 12);
            Int m = rng.range(-3, 15);
            Rat bn(m, n);
            Rat eps = rng.unit_rational(40);
            Rat b = rng.chance(1, 2) ? bn + eps / Rat(n) : bn - eps / Rat(n);
            if (b != 1) {
                Rat bplus = rdn(b, n);
                auto inst = [&] {
                    return "three-case estimate at n=" + n.str() + " m=" + m.str() +
                           " b=" + b.str();
                };
                if (eps < Rat(1) - b) rep.require(bplus <= bn, inst);
                if (eps <= b) rep.require(bplus >= bn, inst);
                if (eps < min(b, Rat(1) - b)) rep.require(bplus == bn, inst);
            }
        }
    }
    return rep;
}

// Gamma(N, Phi) = Phi(R') set-identity on random specs, plus the abridged
// worked example.
inline SuiteReport suite_hyperstandard(std::uint64_t seed, long long iterations) {
    SuiteReport rep{"hyperstandard", seed, iterations};
    Rng rng(seed);

    {  // Gamma({1,2}, {1}) abridged is exactly {0, 1/3, 1/2, 2/3, 5/6, 1}
        HyperstandardSpec spec({Rat(1)}, {Int(1), Int(2)}, true);
        auto got = gamma_enumerate_below(spec, Rat(1, 100));
        std::vector<Rat> expect{Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(5, 6)};
        rep.require(got == expect && gamma_contains(spec, Rat(1)),
                    [&] { return "abridged Gamma({1,2},{1}) enumeration mismatch"; });
    }

    Rat eps(1, 64);
    for (long long it = 0; it < iterations && rep.passed; ++it) {
        std::vector<Rat> r;
        int rs = static_cast<int>(rng.range(0, 3));
        for (int i = 0; i < rs; ++i) r.push_back(rng.unit_rational(8));
        std::vector<Int> n;
        int ns = static_cast<int>(rng.range(0, 3));
        for (int i = 0; i < ns; ++i) n.push_back(rng.range(1, 8));
        HyperstandardSpec spec(r, n, false);
        HyperstandardSpec phi_rprime(as_hyperstandard(spec), {});
        auto a = gamma_enumerate_below(spec, eps);
        auto b = gamma_enumerate_below(phi_rprime, eps);
        rep.require(a == b, [&] {
            std::string s = "Gamma(N,Phi) != Phi(R') for R={";
            for (const Rat& x : spec.R) s += x.str() + ",";
            s += "} N={";
            for (const Int& x : spec.N) s += x.str() + ",";
            return s + "}";
        });
    }
    return rep;
}

// Adjunction transport, the n_Phi inequality and exact invertibility.
inline SuiteReport suite_adjunction(std::uint64_t seed, long long iterations) {
    SuiteReport rep{"adjunction", seed, iterations};
    Rng rng(seed);

    // a pool of transported contexts with enumerated truncations
    struct Context {
        HyperstandardSpec src, dst;
        Rat r;
        Int l, n;
        std::vector<Rat> members;
    };
    std::vector<Context> pool;
    for (int i = 0; i < 24; ++i) {
        std::vector<Rat> r_set = {Rat(1), rng.unit_rational(5)};
        Rat r = rng.chance(1, 3) ? Rat(1) : rng.unit_rational(5);
        Int l = rng.range(1, 4), n = rng.range(1, 4);
        HyperstandardSpec src(r_set, {n});
        HyperstandardSpec dst(transport_hyperstandard({Rat(1), r}, r_set), {n});
        auto members = gamma_enumerate_below(src, Rat(1, 12));
        members.push_back(Rat(1));
        pool.push_back({src, dst, r, l, n, members});
    }

    for (long long it = 0; it < iterations && rep.passed; ++it) {
        const Context& ctx = pool[static_cast<std::size_t>(rng.below(pool.size()))];
        AdjunctionConstants c(ctx.r, ctx.l);
        {  // exact invertibility
            Rat b = rng.rational(30, 12);
            rep.require(adjunction_inverse(c, adjunction_direct(c, b)) == b, [&] {
                return "inverse(direct(b)) != b at r=" + ctx.r.str() + " l=" + ctx.l.str() +
                       " b=" + b.str();
            });
        }
        {  // membership transport
            Rat b = ctx.members[static_cast<std::size_t>(rng.below(ctx.members.size()))];
            if (b <= ctx.r) {
                Rat d = adjunction_direct(c, b);
                rep.require(gamma_contains(ctx.dst, d), [&] {
                    return "transport failure: b=" + b.str() + " r=" + ctx.r.str() +
                           " l=" + ctx.l.str() + " d=" + d.str();
                });
            }
        }
        {  // n_Phi inequality
            Rat b1 = ctx.r * rng.unit_rational(10);
            Rat d1 = adjunction_direct(c, b1);
            Rat dlow = low_approximation(ctx.dst, d1);
            Rat dprime = min(Rat(1), dlow + rng.unit_rational(8) * (Rat(1) - dlow));
            rep.require(n_phi_inequality_check(c, ctx.n, b1, dprime, ctx.src, ctx.dst), [&] {
                return "n_Phi inequality failure: b1=" + b1.str() + " d'=" + dprime.str() +
                       " r=" + ctx.r.str() + " l=" + ctx.l.str() + " n=" + ctx.n.str();
            });
        }
    }
    return rep;
}

// The dimension-1 golden table plus randomized soundness and transfer.
inline SuiteReport suite_dim1_tables(std::uint64_t seed, long long iterations) {
    SuiteReport rep{"dim1-tables", seed, iterations};
    Rng rng(seed);

    auto mk = [](std::vector<Rat> values) {
        CurvePair p;
        int i = 0;
        for (const Rat& v : values) p.B.set("P" + std::to_string(++i), v);
        return p;
    };

    {  // (P^1, P1 + P2/2 + P3/2) is its own 2-complement, and lc type
        CurvePair p = mk({Rat(1), Rat(1, 2), Rat(1, 2)});
        auto cls = classify(p);
        rep.require(cls.type_tag == "lc" && !has_n_complement(p, 1) &&
                        construct_n_complement(p, 2).bplus == p.B,
                    [] { return "lc case (1,1/2,1/2)"; });
    }
    {  // (1/2)^4 is its own 2-complement, semiexceptional
        CurvePair p = mk({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
        auto cls = classify(p);
        rep.require(cls.type_tag == "semiexceptional" &&
                        construct_n_complement(p, 2).bplus == p.B,
                    [] { return "semiexceptional case (1/2)^4"; });
    }
    {  // (2/3, 1/2, 1/2, 1/3) is its own 6-complement (and has a 4-complement)
        CurvePair p = mk({Rat(2, 3), Rat(1, 2), Rat(1, 2), Rat(1, 3)});
        auto cls = classify(p);
        rep.require(cls.type_tag == "exceptional" && has_n_complement(p, 4) &&
                        !has_n_complement(p, 1) &&
                        construct_n_complement(p, 6).bplus == p.B,
                    [] { return "exceptional case (2/3,1/2,1/2,1/3)"; });
    }
    {  // three semiexceptional level-2 patterns admit 2-complements
        std::vector<CurvePair> cases = {
            mk({Rat(3, 5), Rat(11, 20), Rat(1, 2)}),
            mk({Rat(7, 10), Rat(11, 20), Rat(1, 2)}),
            mk({Rat(9, 10), Rat(11, 20), Rat(1, 2)}),
        };
        std::vector<Rat> tops{Rat(1, 2), Rat(2, 3), Rat(5, 6)};
        for (std::size_t i = 0; i < cases.size(); ++i) {
            auto cls = classify(cases[i]);
            bool ok = cls.type_tag == "semiexceptional" && cls.type_detail == "(0,0)" &&
                      cls.approximations.size() == 2 &&
                      cls.approximations[1].approximation.sorted_values() ==
                          std::vector<Rat>{tops[i], Rat(1, 2), Rat(1, 2)} &&
                      has_n_complement(cases[i], 2);
            rep.require(ok, [&] { return "semiexceptional level-2 case " + std::to_string(i); });
        }
    }
    {  // generic approximations follow the three-case table
        auto check_generic = [&](CurvePair p, std::vector<Rat> expect) {
            auto cls = classify(p);
            rep.require(cls.type_tag == "generic" && has_n_complement(p, 1) &&
                            cls.approximations.at(0).approximation.sorted_values() == expect,
                        [&] { return "generic table case"; });
        };
        check_generic(mk({Rat(2, 5)}), {Rat(0)});
        check_generic(mk({Rat(3, 5), Rat(2, 5)}), {Rat(1, 2), Rat(0)});
        check_generic(mk({Rat(3, 4), Rat(3, 5), Rat(1, 4)}), {Rat(1, 2), Rat(1, 2), Rat(0)});
    }

    // randomized soundness + transfer; every iteration contributes one
    // boundary that actually has an n-complement
    for (long long it = 0; it < iterations && rep.passed; ++it) {
        CurvePair p;
        Int n = 1;
        for (int attempt = 0; attempt < 64; ++attempt) {
            CurvePair cand;
            int k = static_cast<int>(rng.range(0, 5));
            for (int i = 0; i < k; ++i)
                cand.B.set("P" + std::to_string(i + 1), rng.unit_rational(12));
            Int ncand = rng.range(1, 9);
            if (has_n_complement(cand, ncand)) {
                p = cand;
                n = ncand;
                break;
            }
        }
        auto res = construct_n_complement(p, n);
        bool sound = check_n_complement_condition1(p.B, res.bplus, n) && res.total() == 2;
        for (const auto& [label, value] : res.bplus.entries())
            sound = sound && value >= 0 && value <= 1 && is_integral_multiple(value, n);
        rep.require(sound, [&] {
            std::string s = "unsound complement for B=(";
            for (const auto& [label, value] : p.B.entries()) s += value.str() + ",";
            return s + ") n=" + n.str();
        });

        // monotone transfer
        CurvePair smaller;
        for (const auto& [label, value] : p.B.entries())
            smaller.B.set(label, value * rng.unit_rational(8));
        rep.require(has_n_complement(smaller, n) &&
                        check_n_complement_condition1(smaller.B, res.bplus, n),
                    [&] { return "monotone transfer failure at n=" + n.str(); });

        // low-approximation transfer: approx <= B, so the complement of the
        // approximation must serve B as well when n lies in the spec's N
        HyperstandardSpec spec({Rat(1), rng.unit_rational(6)}, {n}, rng.chance(1, 3));
        CurvePair approx;
        for (const auto& [label, value] : p.B.entries())
            approx.B.set(label, low_approximation(spec, value));
        auto res2 = construct_n_complement(approx, n);
        rep.require(check_n_complement_condition1(p.B, res2.bplus, n), [&] {
            return "low-approximation transfer failure at n=" + n.str();
        });
    }
    return rep;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, long long iterations) {
    if (name == "inequalities") return suite_inequalities(seed, iterations);
    if (name == "hyperstandard") return suite_hyperstandard(seed, iterations);
    if (name == "adjunction") return suite_adjunction(seed, iterations);
    if (name == "dim1-tables") return suite_dim1_tables(seed, iterations);
    throw usage_error("unknown suite '" + name +
                      "'; expected inequalities|hyperstandard|adjunction|dim1-tables");
}

}  // namespace complements
