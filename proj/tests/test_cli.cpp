#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "complements/cli.hpp"

using namespace complements;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gamma subcommands") {
    auto r = run({"gamma", "enumerate", "--R", "1", "--N", "1,2", "--abridged", "--eps", "1/100",
                  "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1/3 1/2 2/3 5/6\n");

    auto full = run({"gamma", "enumerate", "--R", "1", "--N", "1,2", "--eps", "1/4", "--format",
                     "table"});
    CHECK(full.out == "0 1/3 1/2 2/3 3/4\n");

    auto contains = run({"gamma", "contains", "--R", "1", "--N", "1,2", "--abridged", "--b", "5/6"});
    CHECK(contains.out.find("true") != std::string::npos);

    auto low = run({"gamma", "low-approx", "--R", "1", "--N", "2", "--b", "3/10", "--format",
                    "table"});
    CHECK(low.out == "0\n");

    auto hyper = run({"gamma", "as-hyperstandard", "--R", "1", "--N", "1", "--format", "table"});
    CHECK(hyper.out == "0 1/2 1\n");

    auto tilde = run({"gamma", "tilde", "--R", "1,1/2", "--format", "table"});
    CHECK(tilde.out == "0 1/2 1\n");
}

TEST_CASE("adj subcommands") {
    CHECK(run({"adj", "direct", "--r", "1/2", "--l", "2", "--b", "0", "--format", "table"}).out ==
          "3/4\n");
    CHECK(run({"adj", "inverse", "--r", "1/2", "--l", "2", "--d", "3/4", "--format", "table"}).out ==
          "0\n");
    CHECK(run({"adj", "transport", "--R2", "1,1/2", "--R", "1,1/2", "--format", "table"}).out ==
          "0 1/2 1\n");
    CHECK(run({"adj", "check", "--inequality", "main", "--n", "2", "--l", "1", "--d", "1/2", "--r",
               "1", "--format", "table"})
              .out == "true\n");
    CHECK(run({"adj", "check", "--inequality", "nphi", "--r", "1/2", "--l", "1", "--n", "2",
               "--b1", "1/3", "--dprime", "5/6", "--R", "1", "--Rprime", "1,1/2,0", "--format",
               "table"})
              .out == "true\n");
    auto rdn_check = run({"adj", "check", "--inequality", "inverse-rdn", "--r", "1/2", "--l", "2",
                          "--n", "2", "--d", "3/4"});
    CHECK(rdn_check.out.find("\"rdn_b\": \"0\"") != std::string::npos);
    CHECK(rdn_check.out.find("\"b_bracket_n\": \"1/2\"") != std::string::npos);
}

TEST_CASE("dim1 subcommands") {
    auto cls = run({"dim1", "classify", "--B", "1:1, 2:1/2, 3:1/2", "--format", "table"});
    CHECK(cls.code == 0);
    CHECK(cls.out.find("type: lc") != std::string::npos);
    CHECK(cls.out.find("self-complement at n = 2") != std::string::npos);

    CHECK(run({"dim1", "r-complement", "--B", "1:1,2:1,3:1", "--format", "table"}).out == "false\n");
    CHECK(run({"dim1", "n-complement", "--B", "1:1/2,2:1/2,3:1/2,4:1/2", "--n", "2", "--format",
               "table"})
              .out == "true\n");
    CHECK(run({"dim1", "threshold", "--B", "", "--F", "1:1", "--format", "table"}).out == "1\n");

    auto poly = run({"dim1", "poly-complement", "--poly", "-1,0,1", "--n", "1", "--format", "table"});
    CHECK(poly.out.find("x-1: 1") != std::string::npos);
    CHECK(poly.out.find("x+1: 1") != std::string::npos);
    auto polyJson = run({"dim1", "poly-complement", "--input",
                         R"({"kind":"rational","B":[],"poly":["-2","0","1"]})", "--n", "1",
                         "--format", "table"});
    CHECK(polyJson.out.find("x^2-2: 1") != std::string::npos);

    auto viaJson = run({"dim1", "classify", "--input",
                        R"({"kind":"rational","B":[{"label":"P","value":"0.4"}]})"});
    CHECK(viaJson.code == 0);
    CHECK(viaJson.out.find("\"type\": \"generic\"") != std::string::npos);
}

TEST_CASE("indices subcommands") {
    auto span = run({"indices", "span", "--v", "sqrt2: (1,-1,0); rat: (1,2,3)", "--format", "table"});
    CHECK(span.code == 0);
    CHECK(span.out.find("dimension: 1") != std::string::npos);

    auto solve = run({"indices", "solve", "--I", "1", "--eps", "1/10", "--v",
                      "sqrt2: (1); rat: (-1)", "--budget", "1000", "--format", "table"});
    CHECK(solve.code == 0);
    CHECK(solve.out.find("n = 5") != std::string::npos);
    CHECK(solve.out.find("v_n = 2/5") != std::string::npos);

    auto unknown = run({"indices", "solve", "--I", "1", "--eps", "1/10", "--v", "alpha: (1)"});
    CHECK(unknown.code == 1);  // no enclosure for alpha
    auto given = run({"indices", "solve", "--I", "1", "--eps", "1/2", "--v", "alpha: (1)",
                      "--enclosure", "alpha=141/100,142/100", "--budget", "50", "--format",
                      "table"});
    CHECK(given.code == 0);
}

TEST_CASE("exit codes distinguish usage, domain and budget errors") {
    CHECK(run({"gamma", "bogus"}).code == 1);
    CHECK(run({"dim1", "n-complement", "--B", "1:x", "--n", "1"}).code == 1);
    CHECK(run({"dim1", "construct", "--B", "1:1, 2:1/2, 3:1/2", "--n", "1"}).code == 2);
    CHECK(run({"dim1", "construct", "--B", "1:3/2", "--n", "1"}).code == 2);
    auto budget = run({"indices", "solve", "--I", "1", "--eps", "1/1000000", "--v",
                       "sqrt2: (1); rat: (-1)", "--budget", "10"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("budget") != std::string::npos);
    // domain errors surface with their original kind
    auto germ = run({"dim1", "classify", "--B", "1:1/2", "--kind", "genus1"});
    CHECK(germ.code == 2);
    CHECK(germ.err.find("bad-kind") != std::string::npos);
}

TEST_CASE("suite command is deterministic and seed-sensitive") {
    auto a = run({"suite", "adjunction", "--seed", "11", "--iterations", "300"});
    auto b = run({"suite", "adjunction", "--seed", "11", "--iterations", "300"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("PASS") != std::string::npos);

    setenv("COMPLEMENTS_SEED", "999", 1);
    auto c = run({"suite", "adjunction", "--seed", "11", "--iterations", "300"});
    unsetenv("COMPLEMENTS_SEED");
    CHECK(c.out.find("seed=999") != std::string::npos);

    CHECK(run({"suite", "nonsense"}).code == 1);
}

TEST_CASE("json wire formats round-trip") {
    CurvePair p;
    p.kind = CurveKind::rational;
    p.B.set("P1", rat("2/3"));
    p.B.set("P2", rat("1/2"));
    p.poly = Poly{Rat(-1), Rat(0), Rat(1)};
    auto back = curve_pair_from_json(to_json(p));
    CHECK(back.B == p.B);
    CHECK(back.kind == p.kind);
    REQUIRE(back.poly.has_value());
    CHECK(*back.poly == *p.poly);

    HyperstandardSpec spec({Rat(1), Rat(1, 2)}, {Int(2), Int(3)}, true);
    auto spec2 = hyperstandard_from_json(to_json(spec));
    CHECK(spec2.R == spec.R);
    CHECK(spec2.N == spec.N);
    CHECK(spec2.abridged == spec.abridged);

    IndexProblem prob;
    prob.I = 2;
    prob.eps = Rat(1, 10);
    prob.v.rational_part = {Rat(-1)};
    prob.v.terms.push_back({"sqrt2", Interval(rat("14142/10000"), rat("14143/10000")), {Rat(1)}});
    auto prob2 = index_problem_from_json(to_json(prob));
    CHECK(prob2.I == prob.I);
    CHECK(prob2.eps == prob.eps);
    CHECK(prob2.v.rational_part == prob.v.rational_part);
    CHECK(prob2.v.terms[0].symbol == "sqrt2");
    CHECK(prob2.v.terms[0].enclosure.lo == prob.v.terms[0].enclosure.lo);

    // decimal strings parse exactly
    CHECK(rat_from_json(Json("0.49")) == Rat(49, 100));
    CHECK_THROWS_AS(rat_from_json(Json("x")), error);
    CHECK_THROWS_AS(multiplicity_from_json(Json::parse(
                        R"([{"label":"P","value":"1"},{"label":"P","value":"2"}])")),
                    error);
}
