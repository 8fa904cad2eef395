#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "complements/polynomial.hpp"
#include "complements/rng.hpp"

using namespace complements;
using namespace complements::poly;

namespace {

Poly P(std::initializer_list<int> coeffs_ascending) {
    Poly f;
    for (int c : coeffs_ascending) f.push_back(Rat(c));
    normalize(f);
    return f;
}

IPoly IP(std::initializer_list<int> coeffs_ascending) {
    IPoly f;
    for (int c : coeffs_ascending) f.push_back(Int(c));
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

std::map<std::string, int> factor_map(const Poly& f) {
    std::map<std::string, int> out;
    for (const auto& [g, m] : factor(f).factors) out[to_string(g)] += m;
    return out;
}

}  // namespace

TEST_CASE("polynomial division and gcd") {
    Poly f = mul(P({-1, 1}), P({2, 1}));  // (x-1)(x+2)
    auto [q, r] = divmod(f, P({-1, 1}));
    CHECK(r.empty());
    CHECK(q == P({2, 1}));
    CHECK(gcd(f, P({-1, 1})) == P({-1, 1}));
    CHECK(gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
    CHECK(gcd(P({1, 0, 1}), P({1, 1})) == P({1}));  // coprime
}

TEST_CASE("squarefree decomposition") {
    // x^2 (x-1)^3 (x^2+1)
    Poly f = mul(mul(P({0, 0, 1}), mul(P({-1, 1}), mul(P({-1, 1}), P({-1, 1})))), P({1, 0, 1}));
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == P({1, 0, 1}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == P({0, 1}));
    CHECK(parts[1].second == 2);
    CHECK(parts[2].first == P({-1, 1}));
    CHECK(parts[2].second == 3);
}

TEST_CASE("factorization of classic instances") {
    CHECK(factor_map(P({-1, 0, 1})) == std::map<std::string, int>{{"x-1", 1}, {"x+1", 1}});
    CHECK(factor_map(P({-2, 0, 1})) == std::map<std::string, int>{{"x^2-2", 1}});
    CHECK(factor_map(mul(P({-2, 0, 1}), P({-3, 0, 1}))) ==
          std::map<std::string, int>{{"x^2-2", 1}, {"x^2-3", 1}});
    // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2), no rational roots
    CHECK(factor_map(P({4, 0, 0, 0, 1})) ==
          std::map<std::string, int>{{"x^2-2*x+2", 1}, {"x^2+2*x+2", 1}});
    // fifth cyclotomic polynomial is irreducible
    CHECK(factor_map(P({1, 1, 1, 1, 1})) == std::map<std::string, int>{{"x^4+x^3+x^2+x+1", 1}});
    // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
    CHECK(factor_map(P({-1, 0, 0, 0, 0, 0, 1})) ==
          std::map<std::string, int>{
              {"x-1", 1}, {"x+1", 1}, {"x^2+x+1", 1}, {"x^2-x+1", 1}});
    // non-monic: 2x^2 - 3x - 2 = (2x+1)(x-2)
    CHECK(factor_map(P({-2, -3, 2})) == std::map<std::string, int>{{"2*x+1", 1}, {"x-2", 1}});
    // unit tracking: 6x^2 - 3x = 3 * x * (2x - 1)
    auto fac = factor(P({0, -3, 6}));
    CHECK(fac.unit == 3);
    CHECK(factor_map(P({0, -3, 6})) == std::map<std::string, int>{{"x", 1}, {"2*x-1", 1}});
    // rational input: (1/2)x^2 - 1/2
    Poly half = {Rat(-1, 2), Rat(0), Rat(1, 2)};
    auto fr = factor(half);
    CHECK(fr.unit == Rat(1, 2));
    CHECK(factor_map(half) == std::map<std::string, int>{{"x-1", 1}, {"x+1", 1}});
    CHECK_THROWS_AS(factor(Poly{}), error);
}

TEST_CASE("factorization multiplies back on random products") {
    std::vector<IPoly> pool = {
        IP({0, 1}),      IP({1, 1}),      IP({-1, 1}),    IP({2, 1}),        IP({-2, 1}),
        IP({-1, 2}),     IP({1, 2}),      IP({1, 0, 1}),  IP({-2, 0, 1}),    IP({1, 1, 1}),
        IP({-1, -1, 1}), IP({2, 0, 0, 1}), IP({-2, 0, 0, 1}), IP({3, 0, 1}),
    };
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Poly f = P({1});
        std::map<std::string, int> expected;
        int pieces = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < pieces; ++i) {
            const IPoly& g = rng.pick(pool);
            int mult = static_cast<int>(rng.range(1, 2));
            expected[to_string(g)] += mult;
            for (int j = 0; j < mult; ++j) f = mul(f, to_rational(g));
        }
        int unit = static_cast<int>(rng.range(1, 5));
        f = scale(f, Rat(unit));

        auto fac = factor(f);
        // multiply back exactly
        Poly prod = {fac.unit};
        std::map<std::string, int> got;
        for (const auto& [g, m] : fac.factors) {
            got[to_string(g)] += m;
            for (int j = 0; j < m; ++j) prod = mul(prod, to_rational(g));
        }
        CHECK(prod == f);
        CHECK(got == expected);
    }
}

TEST_CASE("polynomial rendering") {
    CHECK(to_string(IP({-2, 0, 1})) == "x^2-2");
    CHECK(to_string(IP({-1, 1})) == "x-1");
    CHECK(to_string(IP({1, 2})) == "2*x+1");
    CHECK(to_string(IP({0, 1})) == "x");
    CHECK(to_string(IP({3})) == "3");
    CHECK(to_string(IP({0, -1, 0, 4})) == "4*x^3-x");
}
