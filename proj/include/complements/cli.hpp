#pragma once

// Command-line front end. Subcommands:
//   gamma   {contains, enumerate, low-approx, as-hyperstandard, tilde}
//   adj     {direct, inverse, transport, check}
//   indices {span, solve}
//   dim1    {r-complement, n-complement, construct, classify, threshold,
//            poly-complement}
//   suite   {inequalities, hyperstandard, adjunction, dim1-tables}
//
// Rationals on the command line are "p/q" or decimal strings, converted
// exactly. Exit codes: 0 ok, 1 usage error, 2 domain error, 3 budget
// exhausted. COMPLEMENTS_SEED overrides --seed.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "complements/serialize.hpp"
#include "complements/suites.hpp"

namespace complements {
namespace cli {

inline Rat parse_rat_arg(const std::string& s) {
    auto r = parse_rat(s);
    if (!r) throw usage_error("bad rational '" + s + "'");
    return *r;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    if (trim(s).empty()) return out;
    for (const auto& piece : split(s, ',')) out.push_back(parse_rat_arg(trim(piece)));
    return out;
}

inline std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    if (trim(s).empty()) return out;
    for (const auto& piece : split(s, ',')) {
        Rat r = parse_rat_arg(trim(piece));
        if (!r.is_integer()) throw usage_error("expected an integer, got '" + piece + "'");
        out.push_back(r.numerator());
    }
    return out;
}

// "1:1, 2:1/2, 3:1/2" -> multiplicity vector with labels "1", "2", "3".
inline MultiplicityVector parse_multiplicities(const std::string& s) {
    MultiplicityVector out;
    if (trim(s).empty()) return out;
    for (const auto& piece : split(s, ',')) {
        auto entry = trim(piece);
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw usage_error("multiplicity entry '" + entry + "' is not label:value");
        std::string label = trim(entry.substr(0, colon));
        if (label.empty() || out.has(label))
            throw usage_error("bad or duplicate label in '" + entry + "'");
        out.set(label, parse_rat_arg(trim(entry.substr(colon + 1))));
    }
    return out;
}

// Built-in enclosures for sqrtD symbols, by Newton iteration from above.
inline std::optional<Interval> builtin_enclosure(const std::string& name) {
    if (name.rfind("sqrt", 0) != 0) return std::nullopt;
    std::string tail = name.substr(4);
    if (tail.empty() || tail.size() > 3) return std::nullopt;
    for (char c : tail)
        if (c < '0' || c > '9') return std::nullopt;
    int d = std::stoi(tail);
    if (d <= 1) return std::nullopt;
    Rat x(d);
    for (int i = 0; i < 9; ++i) x = (x + Rat(d) / x) / Rat(2);
    return Interval(Rat(d) / x, x);
}

// "sqrt2: (1); rat: (0)" -> symbolic vector. "rat" names the rational
// part; other names are symbols with built-in or supplied enclosures.
inline SymbolicVector parse_symbolic(const std::string& s,
                                     const std::vector<std::string>& enclosure_args) {
    std::map<std::string, Interval> enclosures;
    for (const auto& arg : enclosure_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos)
            throw usage_error("enclosure must be name=lo,hi: '" + arg + "'");
        auto parts = split(arg.substr(eq + 1), ',');
        if (parts.size() != 2) throw usage_error("enclosure must be name=lo,hi: '" + arg + "'");
        enclosures.emplace(trim(arg.substr(0, eq)),
                           Interval(parse_rat_arg(trim(parts[0])), parse_rat_arg(trim(parts[1]))));
    }

    SymbolicVector v;
    std::vector<std::pair<std::string, std::vector<Rat>>> entries;
    std::size_t dim = 0;
    for (const auto& piece : split(s, ';')) {
        auto entry = trim(piece);
        if (entry.empty()) continue;
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw usage_error("symbolic entry '" + entry + "' is not name: (coeffs)");
        std::string name = trim(entry.substr(0, colon));
        std::string coeffs = trim(entry.substr(colon + 1));
        if (!coeffs.empty() && coeffs.front() == '(') coeffs = coeffs.substr(1);
        if (!coeffs.empty() && coeffs.back() == ')') coeffs.pop_back();
        entries.emplace_back(name, parse_rat_list(coeffs));
        dim = std::max(dim, entries.back().second.size());
    }
    if (entries.empty()) throw usage_error("empty symbolic vector");
    v.rational_part.assign(dim, Rat(0));
    for (auto& [name, coeffs] : entries) {
        coeffs.resize(dim, Rat(0));
        if (name == "rat") {
            v.rational_part = coeffs;
            continue;
        }
        Interval enc;
        if (auto it = enclosures.find(name); it != enclosures.end())
            enc = it->second;
        else if (auto built = builtin_enclosure(name))
            enc = *built;
        else
            throw usage_error("symbol '" + name +
                              "' has no enclosure; pass --enclosure " + name + "=lo,hi");
        v.terms.push_back({name, enc, coeffs});
    }
    v.validate();
    return v;
}

inline Json load_json_input(const std::string& input) {
    if (!input.empty() && input.front() == '{') return Json::parse(input);
    std::ifstream in(input);
    if (!in) throw usage_error("cannot open input '" + input + "'");
    Json j;
    in >> j;
    return j;
}

struct RunConfig {
    std::string format = "json";  // json | table
    Int budget = 10000;
    Rat eps = Rat(1, 64);
    std::uint64_t seed = 2024;
    long long iterations = 10000;
};

inline void emit(std::ostream& out, const RunConfig& cfg, const Json& j,
                 const std::function<std::string()>& table) {
    if (cfg.format == "table")
        out << table() << "\n";
    else
        out << j.dump(2) << "\n";
}

inline std::string rat_list_table(const std::vector<Rat>& xs) {
    std::string s;
    for (const Rat& x : xs) s += (s.empty() ? "" : " ") + x.str();
    return s;
}

inline std::string multiplicity_table(const MultiplicityVector& v) {
    std::string s;
    for (const auto& [label, value] : v.entries())
        s += (s.empty() ? "" : "\n") + label + ": " + value.str();
    return s.empty() ? "(empty)" : s;
}

inline Json rats_to_json(const std::vector<Rat>& xs) {
    Json arr = Json::array();
    for (const Rat& x : xs) arr.push_back(rat_to_json(x));
    return arr;
}

// Full command dispatch; throws complements::error for all failures.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus of n-complements: hyperstandard sets, adjunction "
                 "of multiplicities, complementary indices, and the dimension-1 engine"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env_seed = std::getenv("COMPLEMENTS_SEED")) cfg.seed = std::strtoull(env_seed, nullptr, 10);
    app.add_option("--format", cfg.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string r_set, n_set, r_family, b_str, eps_str = "1/64", multiplicities, f_str;
    std::string v_str, e_str, kind_str = "rational", input_path, poly_str, d_str, r_str;
    std::string b1_str, dprime_str, rprime_set, inequality = "main";
    std::vector<std::string> enclosure_args;
    bool abridged = false;
    std::string budget_str = "10000", n_str = "1", l_str = "1", c_str = "2", i_str = "1";
    std::string seed_str, iter_str;

    // ---- gamma ----
    auto* gamma = app.add_subcommand("gamma", "hyperstandard sets Gamma(N, Phi)");
    gamma->require_subcommand(1);
    auto add_spec_opts = [&](CLI::App* cmd) {
        cmd->add_option("--R", r_set, "presentation R as comma-separated rationals");
        cmd->add_option("--N", n_set, "index set N as comma-separated integers");
        cmd->add_flag("--abridged", abridged, "use the abridged (l = 1) variant");
    };
    auto* g_contains = gamma->add_subcommand("contains", "membership of b");
    add_spec_opts(g_contains);
    g_contains->add_option("--b", b_str)->required();
    auto* g_enum = gamma->add_subcommand("enumerate", "Gamma cap [0, 1-eps]");
    add_spec_opts(g_enum);
    g_enum->add_option("--eps", eps_str);
    auto* g_low = gamma->add_subcommand("low-approx", "largest member <= b");
    add_spec_opts(g_low);
    g_low->add_option("--b", b_str)->required();
    auto* g_hyper = gamma->add_subcommand("as-hyperstandard", "presentation R' with Gamma = Phi(R')");
    add_spec_opts(g_hyper);
    auto* g_tilde = gamma->add_subcommand("tilde", "divisorial-adjunction transform of R");
    add_spec_opts(g_tilde);

    // ---- adj ----
    auto* adj = app.add_subcommand("adj", "adjunction correspondence of multiplicities");
    adj->require_subcommand(1);
    auto add_const_opts = [&](CLI::App* cmd) {
        cmd->add_option("--r", r_str, "adjunction constant r <= 1")->required();
        cmd->add_option("--l", l_str, "adjunction constant l >= 1");
    };
    auto* a_direct = adj->add_subcommand("direct", "d = 1 - r/l + b/l");
    add_const_opts(a_direct);
    a_direct->add_option("--b", b_str)->required();
    auto* a_inverse = adj->add_subcommand("inverse", "b = r - l + l d");
    add_const_opts(a_inverse);
    a_inverse->add_option("--d", d_str)->required();
    auto* a_transport = adj->add_subcommand("transport", "R' from the family R'' and R");
    a_transport->add_option("--R2", r_family, "constants family R''")->required();
    a_transport->add_option("--R", r_set, "source presentation R")->required();
    auto* a_check = adj->add_subcommand("check", "inequality checkers");
    a_check->add_option("--inequality", inequality, "main | nphi | inverse-rdn")
        ->check(CLI::IsMember({"main", "nphi", "inverse-rdn"}));
    a_check->add_option("--n", n_str);
    a_check->add_option("--l", l_str);
    a_check->add_option("--r", r_str);
    a_check->add_option("--d", d_str);
    a_check->add_option("--b1", b1_str);
    a_check->add_option("--dprime", dprime_str);
    a_check->add_option("--R", r_set, "presentation of Phi");
    a_check->add_option("--Rprime", rprime_set, "presentation of Phi'");

    // ---- indices ----
    auto* indices = app.add_subcommand("indices", "restrictions on complementary indices");
    indices->require_subcommand(1);
    auto* i_span = indices->add_subcommand("span", "rational affine span of v");
    i_span->add_option("--v", v_str, "symbolic vector, e.g. \"sqrt2: (1); rat: (0)\"");
    i_span->add_option("--enclosure", enclosure_args, "symbol enclosure name=lo,hi");
    i_span->add_option("--input", input_path, "problem JSON (file or inline)");
    auto* i_solve = indices->add_subcommand("solve", "find (n, v_n) with certificates");
    i_solve->add_option("--I", i_str, "divisibility I");
    i_solve->add_option("--eps", eps_str, "approximation strength");
    i_solve->add_option("--v", v_str, "symbolic vector");
    i_solve->add_option("--e", e_str, "direction (comma-separated rationals)");
    i_solve->add_option("--budget", budget_str, "largest n tried");
    i_solve->add_option("--enclosure", enclosure_args, "symbol enclosure name=lo,hi");
    i_solve->add_option("--input", input_path, "problem JSON (file or inline)");

    // ---- dim1 ----
    auto* dim1 = app.add_subcommand("dim1", "complements on curves");
    dim1->require_subcommand(1);
    auto add_pair_opts = [&](CLI::App* cmd) {
        cmd->add_option("--B", multiplicities, "boundary, e.g. \"1:1, 2:1/2\"");
        cmd->add_option("--kind", kind_str, "rational | genus1 | local_germ")
            ->check(CLI::IsMember({"rational", "genus1", "local_germ"}));
        cmd->add_option("--input", input_path, "curve pair JSON (file or inline)");
    };
    auto* d_r = dim1->add_subcommand("r-complement", "existence of an R-complement");
    add_pair_opts(d_r);
    auto* d_n = dim1->add_subcommand("n-complement", "existence of an n-complement");
    add_pair_opts(d_n);
    d_n->add_option("--n", n_str)->required();
    d_n->add_option("--c", c_str, "degree constant (2 on P^1, d+1 on P^d)");
    auto* d_c = dim1->add_subcommand("construct", "build B+ explicitly");
    add_pair_opts(d_c);
    d_c->add_option("--n", n_str)->required();
    auto* d_cls = dim1->add_subcommand("classify", "type classification with witnesses");
    add_pair_opts(d_cls);
    auto* d_t = dim1->add_subcommand("threshold", "R-complement threshold of F");
    add_pair_opts(d_t);
    d_t->add_option("--F", f_str, "effective divisor, e.g. \"1:1\"")->required();
    auto* d_p = dim1->add_subcommand("poly-complement", "complement from a polynomial");
    d_p->add_option("--poly", poly_str, "coefficients a0,a1,... of f");
    d_p->add_option("--input", input_path, "curve pair JSON carrying a poly field");
    d_p->add_option("--n", n_str)->required();

    // ---- suite ----
    auto* suite_cmd = app.add_subcommand("suite", "randomized property suites");
    std::string suite_name;
    suite_cmd->add_option("name", suite_name, "inequalities | hyperstandard | adjunction | dim1-tables")
        ->required();
    suite_cmd->add_option("--seed", seed_str, "random seed (COMPLEMENTS_SEED overrides)");
    suite_cmd->add_option("--iterations", iter_str, "iteration count");

    args.insert(args.begin(), "complements");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    auto make_spec = [&] {
        return HyperstandardSpec(parse_rat_list(r_set), parse_int_list(n_set), abridged);
    };
    auto make_pair = [&] {
        if (!input_path.empty()) return curve_pair_from_json(load_json_input(input_path));
        CurvePair p;
        if (kind_str == "genus1") p.kind = CurveKind::genus1;
        if (kind_str == "local_germ") p.kind = CurveKind::local_germ;
        p.B = parse_multiplicities(multiplicities);
        p.validate();
        return p;
    };
    auto int_arg = [&](const std::string& s) {
        Rat r = parse_rat_arg(s);
        if (!r.is_integer()) throw usage_error("expected integer, got '" + s + "'");
        return Int(r.numerator());
    };

    if (g_contains->parsed()) {
        bool res = gamma_contains(make_spec(), parse_rat_arg(b_str));
        emit(out, cfg, Json{{"contains", res}}, [&] { return std::string(res ? "true" : "false"); });
    } else if (g_enum->parsed()) {
        auto res = gamma_enumerate_below(make_spec(), parse_rat_arg(eps_str));
        emit(out, cfg, Json{{"members", rats_to_json(res)}}, [&] { return rat_list_table(res); });
    } else if (g_low->parsed()) {
        Rat res = low_approximation(make_spec(), parse_rat_arg(b_str));
        emit(out, cfg, Json{{"low_approximation", rat_to_json(res)}}, [&] { return res.str(); });
    } else if (g_hyper->parsed()) {
        auto res = as_hyperstandard(make_spec());
        emit(out, cfg, Json{{"R_prime", rats_to_json(res)}}, [&] { return rat_list_table(res); });
    } else if (g_tilde->parsed()) {
        auto res = tilde_set(parse_rat_list(r_set));
        emit(out, cfg, Json{{"R_bar", rats_to_json(res)}}, [&] { return rat_list_table(res); });
    } else if (a_direct->parsed()) {
        AdjunctionConstants c(parse_rat_arg(r_str), int_arg(l_str));
        Rat res = adjunction_direct(c, parse_rat_arg(b_str));
        emit(out, cfg, Json{{"d", rat_to_json(res)}}, [&] { return res.str(); });
    } else if (a_inverse->parsed()) {
        AdjunctionConstants c(parse_rat_arg(r_str), int_arg(l_str));
        Rat res = adjunction_inverse(c, parse_rat_arg(d_str));
        emit(out, cfg, Json{{"b", rat_to_json(res)}}, [&] { return res.str(); });
    } else if (a_transport->parsed()) {
        auto res = transport_hyperstandard(parse_rat_list(r_family), parse_rat_list(r_set));
        emit(out, cfg, Json{{"R_prime", rats_to_json(res)}}, [&] { return rat_list_table(res); });
    } else if (a_check->parsed()) {
        bool res = false;
        Json detail;
        if (inequality == "main") {
            res = main_inequality_check(int_arg(n_str), int_arg(l_str), parse_rat_arg(d_str),
                                        parse_rat_arg(r_str));
        } else if (inequality == "inverse-rdn") {
            AdjunctionConstants c(parse_rat_arg(r_str), int_arg(l_str));
            auto [lo, hi] = inverse_rdn_monotonicity(c, int_arg(n_str), parse_rat_arg(d_str));
            res = lo <= hi;
            detail = Json{{"rdn_b", rat_to_json(lo)}, {"b_bracket_n", rat_to_json(hi)}};
        } else {
            AdjunctionConstants c(parse_rat_arg(r_str), int_arg(l_str));
            HyperstandardSpec phi(parse_rat_list(r_set), {}, false);
            HyperstandardSpec phi_prime(parse_rat_list(rprime_set), {}, false);
            res = n_phi_inequality_check(c, int_arg(n_str), parse_rat_arg(b1_str),
                                         parse_rat_arg(dprime_str), phi, phi_prime);
        }
        Json j{{"holds", res}};
        if (!detail.is_null()) j["detail"] = detail;
        emit(out, cfg, j, [&] { return std::string(res ? "true" : "false"); });
    } else if (i_span->parsed()) {
        SymbolicVector v = input_path.empty()
                               ? parse_symbolic(v_str, enclosure_args)
                               : index_problem_from_json(load_json_input(input_path)).v;
        auto span = rational_span(v);
        emit(out, cfg, to_json(span), [&] {
            std::string s = "basepoint: " + rat_list_table(span.basepoint) +
                            "\ndimension: " + std::to_string(span.dimension());
            for (const auto& row : span.directions) s += "\ndirection: " + rat_list_table(row);
            return s;
        });
    } else if (i_solve->parsed()) {
        IndexProblem p;
        if (!input_path.empty()) {
            p = index_problem_from_json(load_json_input(input_path));
        } else {
            p.I = int_arg(i_str);
            p.eps = parse_rat_arg(eps_str);
            p.v = parse_symbolic(v_str, enclosure_args);
            if (!e_str.empty()) p.direction = parse_rat_list(e_str);
        }
        auto sol = solve_index_problem(p, int_arg(budget_str));
        emit(out, cfg, to_json(sol), [&] {
            std::string s = "n = " + sol.n.str() + "\nv_n = " + rat_list_table(sol.v_n);
            for (const auto& c : sol.certificates)
                s += "\n[" + c.condition + "] " + c.statement;
            return s;
        });
    } else if (d_r->parsed()) {
        bool res = has_r_complement(make_pair());
        emit(out, cfg, Json{{"has_r_complement", res}},
             [&] { return std::string(res ? "true" : "false"); });
    } else if (d_n->parsed()) {
        bool res = has_n_complement(make_pair(), int_arg(n_str), parse_rat_arg(c_str));
        emit(out, cfg, Json{{"has_n_complement", res}},
             [&] { return std::string(res ? "true" : "false"); });
    } else if (d_c->parsed()) {
        auto res = construct_n_complement(make_pair(), int_arg(n_str));
        emit(out, cfg, to_json(res), [&] {
            return "n = " + res.n.str() + "\n" + multiplicity_table(res.bplus) +
                   "\ntotal = " + res.total().str();
        });
    } else if (d_cls->parsed()) {
        auto res = classify(make_pair());
        emit(out, cfg, to_json(res), [&] {
            std::string s = "type: " + res.type_tag +
                            (res.type_detail.empty() ? "" : " " + res.type_detail);
            for (const auto& lvl : res.approximations)
                s += "\napproximation: " + multiplicity_table(lvl.approximation);
            s += "\ncomplement indices:";
            for (const Int& n : res.complement_indices) s += " " + n.str();
            if (res.self_complement_index)
                s += "\nself-complement at n = " + res.self_complement_index->str();
            return s;
        });
    } else if (d_t->parsed()) {
        Rat res = rct_threshold(make_pair(), parse_multiplicities(f_str));
        emit(out, cfg, Json{{"rct", rat_to_json(res)}}, [&] { return res.str(); });
    } else if (d_p->parsed()) {
        Poly f;
        if (!input_path.empty()) {
            CurvePair p = curve_pair_from_json(load_json_input(input_path));
            if (!p.poly) throw usage_error("curve pair JSON has no poly field");
            f = *p.poly;
        } else {
            for (const Rat& c : parse_rat_list(poly_str)) f.push_back(c);
            poly::normalize(f);
        }
        auto res = polynomial_complement(f, int_arg(n_str));
        emit(out, cfg, to_json(res), [&] {
            return "n = " + res.n.str() + "\n" + multiplicity_table(res.bplus) +
                   "\ntotal = " + res.total().str();
        });
    } else if (suite_cmd->parsed()) {
        std::uint64_t seed = cfg.seed;
        if (!seed_str.empty()) seed = std::strtoull(seed_str.c_str(), nullptr, 10);
        if (const char* env_seed = std::getenv("COMPLEMENTS_SEED"))
            seed = std::strtoull(env_seed, nullptr, 10);
        long long iters = cfg.iterations;
        if (!iter_str.empty()) iters = std::strtoll(iter_str.c_str(), nullptr, 10);
        auto rep = run_suite(suite_name, seed, iters);
        out << rep.summary() << "\n";
        return rep.passed ? 0 : 2;
    }
    return 0;
}

// run_cli with the error taxonomy mapped onto exit codes.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    try {
        return run_cli(std::move(args), out, err);
    } catch (const error& e) {
        err << "error (" << e.kind() << "): " << e.what() << "\n";
        switch (e.code()) {
            case errc::usage: return 1;
            case errc::domain: return 2;
            case errc::budget: return 3;
        }
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

inline int cli_main(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

}  // namespace cli
}  // namespace complements
