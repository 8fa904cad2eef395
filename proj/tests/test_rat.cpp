#include <catch2/catch_amalgamated.hpp>

#include "complements/rat.hpp"
#include "complements/rng.hpp"

using namespace complements;

TEST_CASE("rat arithmetic and normalization") {
    Rat a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(1, 3) + Rat(49, 100) == Rat(247, 300));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) - Rat(1, 2) == 0);
    CHECK(Rat(7, 3) / Rat(7, 3) == 1);
    CHECK_THROWS(Rat(1, 2) / Rat(0));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("floor and ceil follow the Gauss bracket") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-4, 2).floor() == -2);
    CHECK(Rat(0).floor() == 0);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).ceil() == -3);

    Rng rng(41);
    for (int i = 0; i < 2000; ++i) {
        Rat x = rng.rational(200, 40);
        Int f = x.floor();
        CHECK(Rat(f) <= x);
        CHECK(x < Rat(f + 1));
    }
}

TEST_CASE("parsing accepts p/q, integers and decimal strings") {
    CHECK(rat("3/4") == Rat(3, 4));
    CHECK(rat("-3/4") == Rat(-3, 4));
    CHECK(rat("12") == Rat(12));
    CHECK(rat("0.49") == Rat(49, 100));
    CHECK(rat("-0.125") == Rat(-1, 8));
    CHECK(rat(".5") == Rat(1, 2));
    CHECK(!parse_rat("1/0"));
    CHECK(!parse_rat("a/2"));
    CHECK(!parse_rat("1.2.3"));
    CHECK(!parse_rat(""));
    CHECK(!parse_rat("-"));
    CHECK(!parse_rat("1/2/3"));
}

TEST_CASE("string round trip") {
    Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        Rat x = rng.rational(1000, 1000);
        CHECK(rat(x.str()) == x);
    }
    CHECK(Rat(1, 2).str() == "1/2");
    CHECK(Rat(-3).str() == "-3");
    CHECK(Rat(0).str() == "0");
}
