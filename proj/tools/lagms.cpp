// lagms: command-line front end for Laguerre multiplier sequence experiments.
//
// Exit codes: 0 success / pass, 1 mathematical negative (witness found where
// a pass was asked for, NOT_MS evidence, failed identity), 2 usage or
// internal error.

#include "lagms/lagms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

using namespace lagms;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Args {
    std::string alpha = "0";
    bool json = false;

    unsigned n = 0;
    std::string poly;
    std::string spec;
    bool classical = false;

    std::string op = "delta";
    std::string shift = "0";
    bool exp = false;

    unsigned depth = 10;
    unsigned max_degree = 12;
    unsigned scan_degree = 10;
    std::uint64_t seed = 1;
    unsigned trials = 16;
    std::string tol = "1/1000";
    bool no_validate = false;

    std::string a_min = "-2", a_max = "5", b_min = "-1", b_max = "5", step = "1/4";
    std::string out;
    std::string polyline;

    std::string fault;
};

LaguerreParams params_of(const Args& a)
{
    return LaguerreParams(parse_rational(a.alpha));
}

void print_json(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

int cmd_laguerre(const Args& a)
{
    const Polynomial p = laguerre_poly(a.n, params_of(a));
    if (a.json)
        print_json(json{{"n", a.n}, {"alpha", a.alpha}, {"coefficients", to_json(p)}});
    else
        std::cout << format_polynomial(p) << '\n';
    return kOk;
}

int cmd_expand(const Args& a)
{
    const auto params = params_of(a);
    const auto c = to_laguerre_basis(parse_coefficient_text(a.poly), params);
    if (a.json) {
        print_json(to_json(c));
        return kOk;
    }
    std::string line;
    for (const auto& v : c.coefficients())
        line += (line.empty() ? "" : ",") + v.get_str();
    std::cout << (line.empty() ? "0" : line) << '\n';
    return kOk;
}

int cmd_apply(const Args& a)
{
    const auto spec = parse_sequence_spec(a.spec);
    const Polynomial p = parse_coefficient_text(a.poly);
    const Polynomial image = a.classical ? apply_classical(spec, p) : apply_diagonal(spec, params_of(a), p);
    const auto verdict = is_real_rooted(image);
    if (a.json) {
        print_json(json{{"image_coeffs", to_json(image)},
                        {"real_rooted", verdict.all_real},
                        {"real_count", verdict.real_count_with_multiplicity}});
    } else {
        std::cout << format_polynomial(image) << '\n';
        std::cout << "real-rooted: " << (verdict.all_real ? "yes" : "no") << " (" << verdict.real_count_with_multiplicity
                  << " real zeros of " << std::max(image.degree(), 0) << ")\n";
    }
    return kOk;
}

int cmd_symbol(const Args& a)
{
    const auto params = params_of(a);
    DiffOperator op;
    if (a.op == "delta")
        op = delta(params, parse_rational(a.shift));
    else if (a.op == "falling-factorial")
        op = falling_factorial_operator(a.n, params);
    else
        throw CLI::ValidationError("operator", "expected delta or falling-factorial");
    const auto s = a.exp ? exp_symbol(op) : symbol(op);
    if (a.json) {
        json rows = json::array();
        for (const auto& row : s.grid()) {
            json r = json::array();
            for (const auto& v : row)
                r.push_back(v.get_str());
            rows.push_back(r);
        }
        print_json(json{{"variable", a.exp ? "w" : "z"}, {"rows", rows}});
    } else {
        std::cout << format_table(s, a.exp ? "w" : "z");
    }
    return kOk;
}

int cmd_check(const Args& a)
{
    const auto spec = parse_sequence_spec(a.spec);
    const auto params = params_of(a);
    const auto report = necessary_battery(spec, a.depth);
    const auto verdict = classify_known(spec, params);
    const bool negative = !report.passed() || verdict.verdict == MsVerdict::not_ms;
    if (a.json) {
        print_json(json{{"spec", spec.describe()},
                        {"alpha", a.alpha},
                        {"N", a.depth},
                        {"necessary", to_json(report)},
                        {"verdict", to_string(verdict.verdict)},
                        {"citation", verdict.citation}});
        return negative ? kNegative : kOk;
    }
    auto line = [](const char* name, const IndexResult& r) {
        std::cout << name << ": " << (r.ok ? "pass" : "FAIL");
        if (!r.ok)
            std::cout << " at k=" << *r.first_failure << " (" << r.detail << ")";
        std::cout << '\n';
    };
    std::cout << "sequence: " << spec.describe() << ", alpha=" << a.alpha << ", N=" << a.depth << '\n';
    std::cout << "polya-schur: ";
    if (report.polya_schur.ok)
        std::cout << "pass through n=" << report.polya_schur.checked_through << '\n';
    else
        std::cout << "FAIL at n=" << *report.polya_schur.first_failure << ", "
                  << format_polynomial(report.polya_schur.witness) << '\n';
    line("turan", report.turan);
    line("sign-pattern", report.sign_pattern);
    line("zero-pattern", report.zero_pattern);
    std::cout << "verdict: " << to_string(verdict.verdict) << " [" << verdict.citation << "]\n";
    return negative ? kNegative : kOk;
}

int cmd_search(const Args& a)
{
    const auto spec = parse_sequence_spec(a.spec);
    SearchConfig config;
    config.max_degree = a.max_degree;
    config.random_seed = a.seed;
    config.random_trials = a.trials;
    const auto w = search(spec, params_of(a), config);
    if (a.json) {
        print_json(w ? to_json(*w) : json(nullptr));
    } else if (w) {
        std::cout << "witness (" << to_string(w->family);
        for (const auto& [k, v] : w->family_params)
            std::cout << ' ' << k << '=' << v;
        std::cout << ")\n";
        std::cout << "input: " << format_polynomial(w->input) << '\n';
        std::cout << "image: " << format_polynomial(w->image) << '\n';
        std::cout << "image real zeros: " << w->image_verdict.real_count_with_multiplicity << " of "
                  << w->image.degree() << '\n';
    } else {
        std::cout << "no witness up to degree " << a.max_degree << " (not a proof)\n";
    }
    return w ? kOk : kNegative;
}

int cmd_bmax(const Args& a)
{
    const auto r = compute_bmax(a.n, params_of(a), parse_rational(a.tol), !a.no_validate);
    if (a.json) {
        print_json(to_json(r));
    } else {
        std::cout << "[" << r.lo.get_str() << ", " << r.hi.get_str() << "]\n";
        if (!a.no_validate) {
            if (r.member_above)
                std::cout << "validation: member of E_n found above the enclosure at b=" << r.member_above->get_str()
                          << '\n';
            else
                std::cout << "validation: no member above the enclosure\n";
        }
    }
    return r.member_above ? kNegative : kOk;
}

int cmd_scan(const Args& a)
{
    ScanGrid grid;
    grid.a_min = parse_rational(a.a_min);
    grid.a_max = parse_rational(a.a_max);
    grid.b_min = parse_rational(a.b_min);
    grid.b_max = parse_rational(a.b_max);
    grid.step = parse_rational(a.step);
    grid.degree = a.scan_degree;
    grid.seed = a.seed;
    const auto results = scan(grid);
    if (a.out.empty() || a.out == "-")
        emit_csv(results, std::cout);
    else
        write_csv(results, a.out);
    if (!a.polyline.empty()) {
        std::ofstream f(a.polyline, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open " + a.polyline + " for writing");
        emit_boundary_polyline(f);
    }
    int inside_falsified = 0;
    for (const auto& r : results)
        if (r.side == ConjectureSide::inside && r.status == RegionStatus::falsified) {
            std::cerr << "FALSIFIED inside the conjectured region: a=" << r.a.get_str() << " b=" << r.b.get_str()
                      << '\n';
            ++inside_falsified;
        }
    return inside_falsified ? kNegative : kOk;
}

int cmd_verify(const Args& a)
{
    if (!a.fault.empty()) {
        const auto names = identity_suite_names();
        if (std::find(names.begin(), names.end(), a.fault) == names.end())
            throw CLI::ValidationError("--inject-fault", "unknown identity '" + a.fault + "'");
    }
    const auto items = run_identity_suite(a.fault);
    bool all = true;
    for (const auto& i : items)
        all = all && i.passed;
    if (a.json) {
        json list = json::array();
        for (const auto& i : items) {
            json j{{"name", i.name}, {"passed", i.passed}};
            if (!i.passed)
                j["detail"] = i.detail;
            list.push_back(j);
        }
        print_json(json{{"passed", all}, {"items", list}});
    } else {
        for (const auto& i : items) {
            std::cout << (i.passed ? "PASS " : "FAIL ") << i.name;
            if (!i.passed)
                std::cout << " (" << i.detail << ")";
            std::cout << '\n';
        }
        if (!all) {
            auto first = std::find_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.passed; });
            std::cout << "first broken identity: " << first->name << '\n';
        }
    }
    return all ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    Args args;
    CLI::App app{"Laguerre multiplier sequence toolkit"};
    app.require_subcommand(1);

    auto alpha_opt = [&](CLI::App* sub) { sub->add_option("--alpha", args.alpha, "Laguerre parameter, > -1")->capture_default_str(); };
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", args.json, "machine-readable output"); };
    const char* spec_help = R"(sequence as JSON, e.g. '{"type":"linear","a":"3/2"}')";

    auto* lag = app.add_subcommand("laguerre", "print L_n^(alpha)");
    lag->add_option("n", args.n)->required();
    alpha_opt(lag);
    json_flag(lag);

    auto* expand = app.add_subcommand("expand", "coefficients of a polynomial in the Laguerre basis");
    expand->add_option("poly", args.poly, "coefficients, lowest degree first, e.g. 100,-20,1")->required();
    alpha_opt(expand);
    json_flag(expand);

    auto* apl = app.add_subcommand("apply", "image of a polynomial under the diagonal operator");
    apl->add_option("spec", args.spec, spec_help)->required();
    apl->add_option("poly", args.poly, "coefficients, lowest degree first")->required();
    apl->add_flag("--classical", args.classical, "act on the monomial basis instead");
    alpha_opt(apl);
    json_flag(apl);

    auto* sym = app.add_subcommand("symbol", "symbol table of a differential operator");
    sym->add_option("operator", args.op, "delta or falling-factorial")->capture_default_str();
    sym->add_option("-n", args.n, "order of the falling factorial operator");
    sym->add_option("-a,--shift", args.shift, "shift a in delta + a")->capture_default_str();
    sym->add_flag("--exp", args.exp, "exponential symbol (variable w)");
    alpha_opt(sym);
    json_flag(sym);

    auto* chk = app.add_subcommand("check", "necessary conditions and known verdicts");
    chk->add_option("spec", args.spec, spec_help)->required();
    chk->add_option("-N", args.depth, "depth of the necessary battery")->capture_default_str();
    alpha_opt(chk);
    json_flag(chk);

    auto* srch = app.add_subcommand("search", "hunt a real-rooted input with a non-real-rooted image");
    srch->add_option("spec", args.spec, spec_help)->required();
    srch->add_option("--max-degree", args.max_degree)->capture_default_str();
    srch->add_option("--seed", args.seed)->capture_default_str();
    srch->add_option("--trials", args.trials, "random products per degree")->capture_default_str();
    alpha_opt(srch);
    json_flag(srch);

    auto* bm = app.add_subcommand("bmax", "enclose max{b : L_n + b L_(n-2) is real-rooted}");
    bm->add_option("n", args.n)->required()->check(CLI::Range(2u, 1000u));
    bm->add_option("--tol", args.tol)->capture_default_str();
    bm->add_flag("--no-validate", args.no_validate, "skip the scan above the enclosure");
    alpha_opt(bm);
    json_flag(bm);

    auto* sc = app.add_subcommand("scan", "classify quadratic sequences k^2+ak+b over a grid (alpha = 0)");
    sc->add_option("--a-min", args.a_min)->capture_default_str();
    sc->add_option("--a-max", args.a_max)->capture_default_str();
    sc->add_option("--b-min", args.b_min)->capture_default_str();
    sc->add_option("--b-max", args.b_max)->capture_default_str();
    sc->add_option("--step", args.step)->capture_default_str();
    sc->add_option("--degree", args.scan_degree, "search degree budget")->capture_default_str();
    sc->add_option("--seed", args.seed)->capture_default_str();
    sc->add_option("-o,--output", args.out, "CSV path (default stdout)");
    sc->add_option("--boundary", args.polyline, "also write the conjectured-region boundary polyline here");

    auto* ver = app.add_subcommand("verify-paper", "run the exact identity checklist");
    ver->add_option("--inject-fault", args.fault, "perturb one named identity (harness test)");
    json_flag(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*lag)
            return cmd_laguerre(args);
        if (*expand)
            return cmd_expand(args);
        if (*apl)
            return cmd_apply(args);
        if (*sym)
            return cmd_symbol(args);
        if (*chk)
            return cmd_check(args);
        if (*srch)
            return cmd_search(args);
        if (*bm)
            return cmd_bmax(args);
        if (*sc)
            return cmd_scan(args);
        if (*ver)
            return cmd_verify(args);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
