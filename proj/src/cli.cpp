/*
   Copyright 2026 the ffcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ffcf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "ffcf/hecke.hpp"

namespace ffcf::cli {

namespace {

/// Thrown to attribute a library error to the flag whose value caused it.
struct FlagError {
    std::string flag;
    std::string message;
    int exit_code;
};

template <typename Fn>
auto with_flag(const std::string& flag, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const error& e) {
        int code = (e.code() == errc::iteration_budget_exceeded) ? 2 : 1;
        throw FlagError{flag, e.what(), code};
    }
}

FieldCtxPtr make_cli_field(uint64_t q) {
    if (q < 3 || q % 2 == 0 || !is_prime_u64(q))
        throw FlagError{"--q", "q must be an odd prime in CLI mode", 1};
    return FieldCtx::make(uint32_t(q));
}

std::string poly_list(const std::vector<Poly>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

std::vector<Poly> parse_poly_list(const FieldCtx* F, const std::string& text) {
    std::vector<Poly> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ';')) out.push_back(parse_poly(F, tok));
    if (out.empty()) throw error(errc::parse_error, "empty polynomial list");
    return out;
}

void emit_csv(const std::string& csv, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << csv;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw FlagError{"--out", "cannot open '" + out_path + "' for writing", 1};
    file << csv;
}

struct Options {
    uint64_t q = 0;
    std::string surd;
    std::string poly_p;
    std::string digits;
    std::string out_path;
    uint64_t nmax = 0;
    long long bigN = 0;
    uint64_t depth = 1;
    uint64_t steps = 4;
    uint64_t seed = 0;
    long long prec = 16;
    uint64_t ndigits = 8;
};

int cmd_expand(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    Surd f = with_flag("--surd", [&] { return parse_surd(F.get(), o.surd); });
    auto digits = with_flag("--surd", [&] { return cfe_expand(f, o.ndigits); });
    out << "[" << digits[0].str();
    if (digits.size() > 1) {
        out << "; ";
        for (size_t i = 1; i < digits.size(); ++i) {
            if (i > 1) out << ", ";
            out << digits[i].str();
        }
    }
    out << "]\n";
    return 0;
}

int cmd_period(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    Surd f = with_flag("--surd", [&] { return parse_surd(F.get(), o.surd); });
    PeriodicCfe per = with_flag("--surd", [&] { return cfe_period(f); });
    auto [st, ratio] = degree_stats(per, 0);
    (void)ratio;
    out << "pre=" << poly_list(per.preperiod) << " cycle=" << poly_list(per.cycle)
        << " ell=" << per.ell() << " degs=[";
    for (size_t i = 0; i < st.degs.size(); ++i) {
        if (i) out << ", ";
        out << st.degs[i];
    }
    out << "]\n";
    return 0;
}

int cmd_hecke_scan(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    Surd f = with_flag("--surd", [&] { return parse_surd(F.get(), o.surd); });
    Poly P = with_flag("--P", [&] { return parse_poly(F.get(), o.poly_p); });
    auto rows = with_flag("--P", [&] { return escape_table(f, P, o.nmax, o.bigN); });
    emit_csv(escape_csv(rows), o.out_path, out);
    return 0;
}

int cmd_hecke_walk(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    Surd f = with_flag("--surd", [&] { return parse_surd(F.get(), o.surd); });
    Poly P = with_flag("--P", [&] { return parse_poly(F.get(), o.poly_p); });
    auto walk = with_flag("--P", [&] {
        return hecke_walk_explore(f, P, o.depth, chooser_seeded(o.seed), o.bigN);
    });
    std::vector<HeckeRow> rows;
    rows.reserve(walk.size());
    for (auto& [v, row] : walk) rows.push_back(row);
    emit_csv(escape_csv(rows), o.out_path, out);
    return 0;
}

int cmd_natext_check(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    Surd f = with_flag("--surd", [&] { return parse_surd(F.get(), o.surd); });
    NatExtPair p = with_flag("--surd", [&] { return pair_make(f); });
    size_t m = size_t(o.steps);
    auto window = coding_window(p, m);
    out << "window=" << poly_list(window) << "\n";
    out << "returns=[";
    NatExtPair cur = p;
    bool forward_commutes = true;
    Surd plus_orbit = p.plus;
    for (size_t i = 0; i < m; ++i) {
        if (i) out << ", ";
        out << first_return_time(cur);
        auto [d, next] = natext_step(cur);
        (void)d;
        auto [ad, anext] = artin_step(plus_orbit);
        (void)ad;
        plus_orbit = anext;
        forward_commutes = forward_commutes && (next.plus == plus_orbit);
        cur = next;
    }
    out << "]\n";
    NatExtPair back = cur;
    for (size_t i = 0; i < m; ++i) back = natext_unstep(back).second;
    out << "roundtrip=" << ((back == p) ? "ok" : "FAIL") << "\n";
    out << "commute=" << (forward_commutes ? "ok" : "FAIL") << "\n";
    return (back == p && forward_commutes) ? 0 : 1;
}

int cmd_cylinder(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    CylinderSpec spec;
    spec.digits = with_flag("--digits", [&] { return parse_poly_list(F.get(), o.digits); });
    Rat mass = with_flag("--digits", [&] { return cylinder_measure(spec); });
    out << "mass=" << rat_str(mass) << "\n";
    return 0;
}

int cmd_measure_constants(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    size_t cutoff = o.nmax ? size_t(o.nmax) : 20;
    MassConstants mc = mass_constants(F.get(), cutoff);
    out << "series=" << rat_str(mc.series_value) << "\n";
    out << "partials=";
    for (size_t i = 0; i < mc.partial_sums.size(); ++i) {
        if (i) out << ";";
        out << rat_str(mc.partial_sums[i]);
    }
    out << "\n";
    out << "paper_mass=" << rat_str(mc.paper_mass) << "\n";
    out << "paper_fmx=" << rat_str(mc.paper_fmx) << "\n";
    out << "derived_fmx=" << rat_str(mc.derived_fmx) << "\n";
    out << "match=" << (mc.mismatch ? "false" : "true") << "\n";
    return 0;
}

int cmd_sqrt_series(const Options& o, std::ostream& out) {
    auto F = make_cli_field(o.q);
    Poly P = with_flag("--P", [&] { return parse_poly(F.get(), o.poly_p); });
    Laurent s = with_flag("--P", [&] { return lau_sqrt(Laurent::from_poly(P), o.prec); });
    out << s.str() << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact continued fractions of quadratic irrationals over F_q((Y^-1))"};
    app.require_subcommand(1);
    Options o;

    auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "field size (odd prime)")->required(); };
    auto add_surd = [&](CLI::App* sub) {
        sub->add_option("--surd", o.surd, "surd literal A|B|C|S")->required();
    };

    CLI::App* expand = app.add_subcommand("expand", "continued fraction coefficients");
    add_q(expand);
    add_surd(expand);
    expand->add_option("--digits", o.ndigits, "number of coefficients after a_0");

    CLI::App* period = app.add_subcommand("period", "preperiod and minimal cycle");
    add_q(period);
    add_surd(period);

    CLI::App* scan = app.add_subcommand("hecke-scan", "degree statistics along P^n f");
    add_q(scan);
    add_surd(scan);
    scan->add_option("--P", o.poly_p, "irreducible polynomial literal")->required();
    scan->add_option("--nmax", o.nmax, "last ray index");
    scan->add_option("--bigN", o.bigN, "N in the escape ratio");
    scan->add_option("--out", o.out_path, "CSV output path (default stdout)");

    CLI::App* walk = app.add_subcommand("hecke-walk", "non-backtracking neighbor walk");
    add_q(walk);
    add_surd(walk);
    walk->add_option("--P", o.poly_p, "irreducible polynomial literal")->required();
    walk->add_option("--depth", o.depth, "walk length");
    walk->add_option("--seed", o.seed, "branch chooser seed");
    walk->add_option("--bigN", o.bigN, "N in the escape ratio");
    walk->add_option("--out", o.out_path, "CSV output path (default stdout)");

    CLI::App* natext = app.add_subcommand("natext-check", "two-sided dynamics diagnostics");
    add_q(natext);
    add_surd(natext);
    natext->add_option("--steps", o.steps, "window radius / step count");

    CLI::App* cylinder = app.add_subcommand("cylinder", "Haar mass of a cylinder");
    add_q(cylinder);
    cylinder->add_option("--digits", o.digits, "cylinder digits a_1;a_2;... (poly literals)")
        ->required();

    CLI::App* constants = app.add_subcommand("measure-constants", "cross-section mass constants");
    add_q(constants);
    constants->add_option("--nmax", o.nmax, "partial sum cutoff (default 20)");

    CLI::App* sqrt_series = app.add_subcommand("sqrt-series", "canonical sqrt of a polynomial");
    add_q(sqrt_series);
    sqrt_series->add_option("--P", o.poly_p, "radicand polynomial literal")->required();
    sqrt_series->add_option("--prec", o.prec, "series precision");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (expand->parsed()) return cmd_expand(o, out);
        if (period->parsed()) return cmd_period(o, out);
        if (scan->parsed()) return cmd_hecke_scan(o, out);
        if (walk->parsed()) return cmd_hecke_walk(o, out);
        if (natext->parsed()) return cmd_natext_check(o, out);
        if (cylinder->parsed()) return cmd_cylinder(o, out);
        if (constants->parsed()) return cmd_measure_constants(o, out);
        if (sqrt_series->parsed()) return cmd_sqrt_series(o, out);
    } catch (const FlagError& e) {
        err << "error: " << e.flag << ": " << e.message << "\n";
        return e.exit_code;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == errc::iteration_budget_exceeded ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command given\n";
    return 1;
}

}  // namespace ffcf::cli
