#include <catch2/catch_amalgamated.hpp>

#include "complements/dim1.hpp"
#include "complements/rng.hpp"

using namespace complements;

namespace {

CurvePair pair_of(std::vector<const char*> values, CurveKind kind = CurveKind::rational) {
    CurvePair p;
    p.kind = kind;
    int i = 0;
    for (const char* v : values) p.B.set("P" + std::to_string(++i), rat(v));
    return p;
}

CurvePair random_boundary(Rng& rng, int max_points = 5, long long max_den = 12) {
    CurvePair p;
    int k = static_cast<int>(rng.range(0, max_points));
    for (int i = 0; i < k; ++i) p.B.set("P" + std::to_string(i + 1), rng.unit_rational(max_den));
    return p;
}

}  // namespace

TEST_CASE("R-complement existence on curves") {
    CHECK(has_r_complement(pair_of({})));
    CHECK_FALSE(has_r_complement(pair_of({"1", "1", "1"})));
    CHECK(has_r_complement(pair_of({"1", "1/2", "1/2"})));
    CHECK(has_r_complement(pair_of({"1", "1"})));
    CHECK_FALSE(has_r_complement(pair_of({"1", "1", "1/100"})));
    CHECK(has_r_complement(pair_of({}, CurveKind::genus1)));
    CHECK_FALSE(has_r_complement(pair_of({"1/2"}, CurveKind::genus1)));
    CHECK(has_r_complement(pair_of({"1"}, CurveKind::local_germ)));
    CHECK_THROWS_AS(has_r_complement(pair_of({"3/2"})), error);
}

TEST_CASE("n-complement existence on P^1") {
    CHECK(has_n_complement(pair_of({"1/2", "1/2", "1/2", "1/2"}), 2));
    CHECK(has_n_complement(pair_of({"2/3", "1/2", "1/2", "1/3"}), 6));
    CHECK_FALSE(has_n_complement(pair_of({"2/3", "1/2", "1/2", "1/3"}), 1));
    CHECK(has_n_complement(pair_of({"2/3", "1/2", "1/2", "1/3"}), 4));
    CHECK_FALSE(has_n_complement(pair_of({"1", "1/2", "1/2"}), 1));
    CHECK(has_n_complement(pair_of({"1", "1/2", "1/2"}), 2));
    // P^d variant: c = d + 1
    CHECK(has_n_complement(pair_of({"1", "1", "1/2", "1/2"}), 2, Rat(3)));
    CHECK_FALSE(has_n_complement(pair_of({"1", "1", "1", "1/2"}), 2, Rat(2)));
    // genus 1 and local germs
    CHECK(has_n_complement(pair_of({}, CurveKind::genus1), 7));
    CHECK_FALSE(has_n_complement(pair_of({"1/3"}, CurveKind::genus1), 7));
    CHECK(has_n_complement(pair_of({"9/10"}, CurveKind::local_germ), 3));
}

TEST_CASE("construction of complements") {
    SECTION("empty boundary, n = 1: two general points") {
        auto res = construct_n_complement(pair_of({}), 1);
        CHECK(res.bplus.size() == 2);
        CHECK(res.total() == 2);
        for (const auto& [label, value] : res.bplus.entries()) CHECK(value == 1);
    }
    SECTION("(1, 1/2, 1/2) is its own 2-complement") {
        auto p = pair_of({"1", "1/2", "1/2"});
        auto res = construct_n_complement(p, 2);
        CHECK(res.bplus == p.B);
    }
    SECTION("(1/3) at n = 2: kept entry 1/2 plus three points of 1/2") {
        auto res = construct_n_complement(pair_of({"1/3"}), 2);
        CHECK(res.bplus.get("P1") == rat("1/2"));
        CHECK(res.bplus.size() == 4);
        CHECK(res.total() == 2);
    }
    SECTION("no complement is a reported error") {
        CHECK_THROWS_AS(construct_n_complement(pair_of({"1", "1/2", "1/2"}), 1), error);
    }
    SECTION("genus 1 and local germs") {
        auto res = construct_n_complement(pair_of({}, CurveKind::genus1), 5);
        CHECK(res.bplus.empty());
        auto germ = construct_n_complement(pair_of({"7/10"}, CurveKind::local_germ), 3);
        CHECK(germ.bplus.get("P1") == rdn(rat("7/10"), 3));
    }
    SECTION("soundness on random boundaries") {
        Rng rng(71);
        int built = 0;
        for (int trial = 0; trial < 4000; ++trial) {
            CurvePair p = random_boundary(rng);
            Int n = rng.range(1, 9);
            if (!has_n_complement(p, n)) continue;
            auto res = construct_n_complement(p, n);  // verify_complement runs inside
            CHECK(check_n_complement_condition1(p.B, res.bplus, n));
            CHECK(res.total() == 2);
            ++built;
        }
        CHECK(built > 500);
    }
}

TEST_CASE("monotonicity transfer") {
    Rng rng(73);
    for (int trial = 0; trial < 2000; ++trial) {
        CurvePair p = random_boundary(rng);
        Int n = rng.range(1, 9);
        CurvePair smaller;
        for (const auto& [label, value] : p.B.entries())
            smaller.B.set(label, value * rng.unit_rational(8));
        if (!has_n_complement(p, n)) continue;
        CHECK(has_n_complement(smaller, n));
        auto res = construct_n_complement(p, n);
        CHECK(check_n_complement_condition1(smaller.B, res.bplus, n));
    }
}

TEST_CASE("joining multiplicities never destroys a complement") {
    // floor((n+1)(a+b))/n >= floor((n+1)a)/n + floor((n+1)b)/n
    Rng rng(79);
    for (int trial = 0; trial < 3000; ++trial) {
        Int n = rng.range(1, 10);
        Rat a = rng.unit_rational(15), b = rng.unit_rational(15);
        Rat joined(((a + b) * Rat(n + 1)).floor(), n);
        CHECK(joined >= Rat((a * Rat(n + 1)).floor(), n) + Rat((b * Rat(n + 1)).floor(), n));
    }
}

TEST_CASE("R- versus n-complements at integral denominators") {
    // for nB integral: has_n_complement(B, n) <=> has_r_complement(B)
    Rng rng(83);
    for (int trial = 0; trial < 2000; ++trial) {
        Int n = rng.range(1, 12);
        CurvePair p;
        int k = static_cast<int>(rng.range(0, 5));
        for (int i = 0; i < k; ++i)
            p.B.set("P" + std::to_string(i + 1), Rat(Int(rng.below(static_cast<std::uint64_t>(n) + 1)), n));
        CHECK(has_n_complement(p, n) == has_r_complement(p));
        // and along a divisibility chain the equivalence persists
        CHECK(has_n_complement(p, 2 * n) == has_r_complement(p));
        CHECK(has_n_complement(p, 6 * n) == has_r_complement(p));
    }
}

TEST_CASE("classification replays the worked dimension-1 table") {
    SECTION("lc type") {
        auto r = classify(pair_of({"1", "1/2", "1/2"}));
        CHECK(r.type_tag == "lc");
        CHECK(r.complement_indices == std::vector<Int>{2});
        REQUIRE(r.self_complement_index.has_value());
        CHECK(*r.self_complement_index == 2);
        auto r2 = classify(pair_of({"1", "1/2", "49/100"}));
        CHECK(r2.type_tag == "lc");
        CHECK(r2.complement_indices == std::vector<Int>{1, 2});
        auto r3 = classify(pair_of({"1", "1"}));
        CHECK(r3.type_tag == "lc");
    }
    SECTION("generic cases and their level-1 approximations") {
        auto r = classify(pair_of({"2/5"}));
        CHECK(r.type_tag == "generic");
        CHECK(r.approximations.size() == 1);
        CHECK(r.approximations[0].approximation.get("P1") == 0);
        CHECK(r.complement_indices == std::vector<Int>{1});

        auto r2 = classify(pair_of({"3/5", "2/5"}));
        CHECK(r2.type_tag == "generic");
        CHECK(r2.approximations[0].approximation.get("P1") == rat("1/2"));
        CHECK(r2.approximations[0].approximation.get("P2") == 0);

        auto r3 = classify(pair_of({"9/10", "8/10", "3/10"}));
        CHECK(r3.type_tag == "generic");
        CHECK(r3.approximations[0].approximation.get("P1") == rat("1/2"));
        CHECK(r3.approximations[0].approximation.get("P2") == rat("1/2"));
        CHECK(r3.approximations[0].approximation.get("P3") == 0);
    }
    SECTION("the (1/2)^4 configuration") {
        auto p = pair_of({"1/2", "1/2", "1/2", "1/2"});
        auto r = classify(p);
        CHECK(r.type_tag == "semiexceptional");
        REQUIRE(r.self_complement_index.has_value());
        CHECK(*r.self_complement_index == 2);
        CHECK(construct_n_complement(p, 2).bplus == p.B);
    }
    SECTION("the three semiexceptional level-2 patterns all admit 2-complements") {
        auto a = classify(pair_of({"3/5", "11/20", "1/2"}));
        CHECK(a.type_tag == "semiexceptional");
        CHECK(a.type_detail == "(0,0)");
        REQUIRE(a.approximations.size() == 2);
        CHECK(a.approximations[1].approximation.sorted_values() ==
              std::vector<Rat>{rat("1/2"), rat("1/2"), rat("1/2")});
        CHECK(a.complement_indices == std::vector<Int>{2});

        auto b = classify(pair_of({"7/10", "11/20", "1/2"}));
        CHECK(b.type_tag == "semiexceptional");
        CHECK(b.approximations[1].approximation.sorted_values() ==
              std::vector<Rat>{rat("2/3"), rat("1/2"), rat("1/2")});
        CHECK(b.complement_indices == std::vector<Int>{2});

        auto c = classify(pair_of({"9/10", "11/20", "1/2"}));
        CHECK(c.type_tag == "semiexceptional");
        CHECK(c.approximations[1].approximation.sorted_values() ==
              std::vector<Rat>{rat("5/6"), rat("1/2"), rat("1/2")});
        CHECK(c.complement_indices == std::vector<Int>{2});
    }
    SECTION("exceptional cases carry indices from {3, 4, 6}") {
        auto p = pair_of({"2/3", "1/2", "1/2", "1/3"});
        auto r = classify(p);
        CHECK(r.type_tag == "exceptional");
        CHECK(r.type_detail == "(-1,-)");
        CHECK(r.complement_indices == std::vector<Int>{4, 6});
        CHECK(construct_n_complement(p, 6).bplus == p.B);  // its own 6-complement
        CHECK(has_n_complement(p, 4));

        auto q = classify(pair_of({"4/5", "7/10", "1/2"}));
        CHECK(q.type_tag == "exceptional");
        CHECK(!q.complement_indices.empty());

        auto s = classify(pair_of({"5/6", "2/3", "1/2"}));
        CHECK(s.type_tag == "exceptional");
        CHECK(s.complement_indices == std::vector<Int>{6});
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(classify(pair_of({"1", "1", "1/10"})), error);
        CHECK_THROWS_AS(classify(pair_of({}, CurveKind::genus1)), error);
    }
}

TEST_CASE("every classified pair admits a complement at a reported index") {
    Rng rng(89);
    int classified = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        CurvePair p = random_boundary(rng, 6, 20);
        if (!has_r_complement(p)) continue;
        auto r = classify(p);
        CHECK(!r.complement_indices.empty());
        for (const Int& n : r.complement_indices) CHECK(has_n_complement(p, n));
        ++classified;
    }
    CHECK(classified > 1000);
}

TEST_CASE("low-approximation transfer for complements") {
    // an n-complement of (P^1, B_{N_Phi}) with n in N is one of (P^1, B)
    Rng rng(97);
    for (int trial = 0; trial < 800; ++trial) {
        std::vector<Rat> r_set = {Rat(1), rng.unit_rational(6)};
        std::vector<Int> n_set = {rng.range(1, 6)};
        HyperstandardSpec spec(r_set, n_set, rng.chance(1, 3));
        Int n = n_set[0];
        CurvePair p = random_boundary(rng, 4, 16);
        CurvePair approx;
        for (const auto& [label, value] : p.B.entries())
            approx.B.set(label, low_approximation(spec, value));
        if (!has_n_complement(approx, n)) continue;
        auto res = construct_n_complement(approx, n);
        CHECK(check_n_complement_condition1(p.B, res.bplus, n));
    }
}

TEST_CASE("thresholds") {
    SECTION("worked rct instances") {
        CurvePair empty = pair_of({});
        MultiplicityVector f1;
        f1.set("P1", Rat(1));
        CHECK(rct_threshold(empty, f1) == 1);

        MultiplicityVector f2;
        f2.set("P1", Rat(1, 4));
        f2.set("P2", Rat(1, 4));
        CHECK(rct_threshold(empty, f2) == 4);

        CurvePair tight = pair_of({"1"});
        MultiplicityVector f3;
        f3.set("P1", Rat(1));
        CHECK(rct_threshold(tight, f3) == 0);
    }
    SECTION("rct marks the exact boundary of R-complement existence") {
        Rng rng(101);
        for (int trial = 0; trial < 1500; ++trial) {
            CurvePair p = random_boundary(rng, 4, 10);
            if (!has_r_complement(p)) continue;
            MultiplicityVector f;
            int k = static_cast<int>(rng.range(1, 3));
            for (int i = 0; i < k; ++i) f.set("P" + std::to_string(rng.range(1, 5)), rng.unit_rational(6));
            if (f.sum() == 0) continue;
            Rat t = rct_threshold(p, f);
            CurvePair at;
            for (const auto& label : MultiplicityVector::joint_labels(p.B, f))
                at.B.set(label, p.B.get(label) + t * f.get(label));
            CHECK(has_r_complement(at));  // attained
            CurvePair beyond;
            Rat tplus = t + Rat(1, 1000);
            for (const auto& label : MultiplicityVector::joint_labels(p.B, f))
                beyond.B.set(label, min(Rat(1), p.B.get(label) + tplus * f.get(label)));
            bool cap_broken = false;
            for (const auto& label : MultiplicityVector::joint_labels(p.B, f))
                if (p.B.get(label) + tplus * f.get(label) > 1) cap_broken = true;
            CHECK((cap_broken || !has_r_complement(beyond)));
        }
    }
    SECTION("local germ thresholds are log canonical thresholds") {
        CurvePair germ = pair_of({"1/2"}, CurveKind::local_germ);
        MultiplicityVector f;
        f.set("P1", Rat(2));
        CHECK(rct_threshold(germ, f) == lct_smooth_point(rat("1/2"), Rat(2)));
        CHECK(lct_smooth_point(Rat(0), Rat(1)) == 1);
        CHECK(lct_smooth_point(rat("1/2"), Rat(1)) == rat("1/2"));
        CHECK(lct_smooth_point(Rat(1), rat("7/3")) == 0);
        CHECK_THROWS_AS(lct_smooth_point(Rat(1), Rat(0)), error);
    }
    SECTION("genus 1") {
        CurvePair e = pair_of({}, CurveKind::genus1);
        MultiplicityVector f;
        f.set("P1", Rat(1));
        CHECK(rct_threshold(e, f) == 0);
    }
}

TEST_CASE("polynomial complements of (P^1, 0)") {
    SECTION("x^2 - 1 at n = 1: two simple points") {
        auto res = polynomial_complement({Rat(-1), Rat(0), Rat(1)}, 1);
        CHECK(res.bplus.get("x-1") == 1);
        CHECK(res.bplus.get("x+1") == 1);
        CHECK(res.total() == 2);
    }
    SECTION("x^2 at n = 1 is rejected for multiplicity") {
        try {
            polynomial_complement({Rat(0), Rat(0), Rat(1)}, 1);
            FAIL("expected excessive-multiplicity");
        } catch (const error& e) {
            CHECK(e.kind() == "excessive-multiplicity");
            CHECK(std::string(e.what()).find("x") != std::string::npos);
        }
    }
    SECTION("odd degree always rejected") {
        Poly f = poly::mul({Rat(-2), Rat(0), Rat(1)}, poly::mul({Rat(0), Rat(0), Rat(1)}, {Rat(-1), Rat(1)}));
        REQUIRE(poly::degree(f) == 5);
        for (Int n : {1, 2, 3}) {
            try {
                polynomial_complement(f, n);
                FAIL("expected wrong-degree");
            } catch (const error& e) {
                CHECK(e.kind() == "wrong-degree");
            }
        }
    }
    SECTION("irrational points keep their residue degree") {
        auto res = polynomial_complement({Rat(-2), Rat(0), Rat(1)}, 1);  // x^2 - 2
        CHECK(res.bplus.get("x^2-2") == 1);
        CHECK(res.degree_of("x^2-2") == 2);
        CHECK(res.total() == 2);
    }
    SECTION("repeated factors within the bound") {
        // (x-1)^2 (x+2)^2 at n = 2
        Poly f = poly::mul(poly::mul({Rat(-1), Rat(1)}, {Rat(-1), Rat(1)}),
                           poly::mul({Rat(2), Rat(1)}, {Rat(2), Rat(1)}));
        auto res = polynomial_complement(f, 2);
        CHECK(res.bplus.get("x-1") == 1);
        CHECK(res.bplus.get("x+2") == 1);
    }
}
