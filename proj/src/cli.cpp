#include "eqidx/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "eqidx/characters.hpp"
#include "eqidx/index.hpp"
#include "eqidx/lefschetz.hpp"
#include "eqidx/series.hpp"
#include "eqidx/verify.hpp"

namespace eqidx::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Window parse_window(const std::string& text, const char* flag) {
    static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw UsageError(std::string(flag) + " expects lo..hi, got '" + text + "'");
    }
    Window w{std::stoi(m[1]), std::stoi(m[2])};
    if (w.empty()) throw UsageError(std::string(flag) + " is empty: " + text);
    return w;
}

struct Options {
    int n = 0;
    int k = 0;
    int j = 0;
    int l = 0;
    int m = 0;
    std::optional<int> q;
    std::string window;
    std::string f;
    std::string format = "text";
    std::string kind = "j";
    std::uint64_t seed = VerifyOptions{}.seed;
    int jobs = 1;
    int points = 3;
    std::optional<int> n_max;
    std::string k_range;
};

void print_series(std::ostream& out, const WindowedSeries& s) {
    for (int m = s.window().lo; m <= s.window().hi; ++m) out << m << ": " << format(s.coefficient(m)) << '\n';
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

std::string complex_text(const Complex& z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

int cmd_poly(const Options& o, std::ostream& out, const LaurentPoly& p) {
    if (o.format == "json") {
        out << to_json(p).dump(2) << '\n';
    } else {
        out << format(p) << '\n';
    }
    return kPass;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("cohomology needs --n >= 1");
    if (o.q && (*o.q < 0 || *o.q > o.n)) throw UsageError("--q must lie in 0..n");
    if (o.q) return cmd_poly(o, out, cohomology_character(o.n, *o.q, o.m));
    if (o.format == "json") {
        Json arr = Json::array();
        for (int q = 0; q <= o.n; ++q) {
            arr.push_back(Json{{"q", q},
                               {"dimension", dimension(o.n, q, o.m).get_str()},
                               {"character", to_json(cohomology_character(o.n, q, o.m))}});
        }
        out << Json{{"n", o.n}, {"m", o.m}, {"cohomology", std::move(arr)}}.dump(2) << '\n';
    } else {
        for (int q = 0; q <= o.n; ++q) out << "H^" << q << ": " << format(cohomology_character(o.n, q, o.m)) << '\n';
    }
    return kPass;
}

int cmd_series(const Options& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("--n must be nonnegative");
    const Window w = o.window.empty() ? default_window(o.n, o.k) : parse_window(o.window, "--window");
    WindowedSeries s = o.kind == "j0" ? j0(o.n, o.k, w) : o.kind == "jinf" ? j_inf(o.n, o.k, w) : j_delta(o.n, o.k, w);
    if (o.format == "json") {
        out << to_json(s).dump(2) << '\n';
    } else {
        print_series(out, s);
    }
    return kPass;
}

int cmd_index(const Options& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("--n must be nonnegative");
    const Window w = o.window.empty() ? Window{-10, 10} : parse_window(o.window, "--window");
    const auto r = index_report(o.n, o.k, w);
    if (o.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << "n=" << r.n << " k=" << r.k << " window " << r.window.lo << ".." << r.window.hi << '\n';
        out << "match: " << (r.match ? "true" : "false") << '\n';
        if (r.first_mismatch) out << "first mismatch: m=" << *r.first_mismatch << '\n';
        print_series(out, r.direct);
    }
    return r.match ? kPass : kFail;
}

int cmd_lefschetz(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("lefschetz needs --n >= 1");
    if (o.f.empty()) throw UsageError("lefschetz needs --f");
    if (o.points < 0) throw UsageError("--points must be nonnegative");
    const KClassRep rep{parse(o.f, o.n + 1)};
    const auto residue = lefschetz_residue(o.n, rep);
    const auto euler = euler_characteristic(o.n, rep);
    const bool equal = residue == euler;

    Json checks = Json::array();
    bool numeric_ok = true;
    std::ostringstream text;
    for (int p = 0; p < o.points; ++p) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(p);
        const auto pt = random_torus_point(o.n, seed);
        const Complex lhs = fixed_point_eval(o.n, rep, pt);
        const Complex rhs = eval_at(residue, pt);
        const double err = std::abs(lhs - rhs);
        numeric_ok = numeric_ok && err <= 1e-9 * (1.0 + std::abs(rhs));
        Json point = Json::array();
        for (const auto& z : pt.coords) point.push_back(complex_json(z));
        checks.push_back(Json{{"seed", seed},
                              {"point", std::move(point)},
                              {"lhs", complex_json(lhs)},
                              {"rhs", complex_json(rhs)},
                              {"abs_err", err}});
        text << "numeric seed " << seed << ": lhs " << complex_text(lhs) << ", rhs " << complex_text(rhs)
             << ", abs_err " << err << '\n';
    }
    if (o.format == "json") {
        out << Json{{"n", o.n},
                    {"f", format(rep.poly)},
                    {"residue_result", format(residue)},
                    {"euler_result", format(euler)},
                    {"equal", equal},
                    {"numeric_checks", std::move(checks)}}
                   .dump(2)
            << '\n';
    } else {
        out << "residue: " << format(residue) << '\n'
            << "euler: " << format(euler) << '\n'
            << "equal: " << (equal ? "true" : "false") << '\n'
            << text.str();
    }
    return equal && numeric_ok ? kPass : kFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyOptions v;
    v.seed = o.seed;
    v.jobs = o.jobs;
    v.n_max = o.n_max;
    if (!o.k_range.empty()) v.k_range = parse_window(o.k_range, "--k-range");
    if (v.jobs < 1) throw UsageError("--jobs must be positive");
    const auto report = run_verify(v);
    if (o.format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << format_report(report);
    }
    return report.exit_status();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant index computations on CP^n and circle bundles over it", "eqidx"};
    app.require_subcommand(1);
    Options o;

    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto* chi_cmd = app.add_subcommand("chi", "Character chi_{n,l}");
    chi_cmd->add_option("--n", o.n)->required();
    chi_cmd->add_option("--l", o.l)->required();
    format_opt(chi_cmd);

    auto* coh = app.add_subcommand("cohomology", "Characters of H^q(CP^n, O(m))");
    coh->add_option("--n", o.n)->required();
    coh->add_option("--m", o.m)->required();
    coh->add_option("--q", o.q, "Single degree; all degrees when absent");
    format_opt(coh);

    auto* bp = app.add_subcommand("bpoly", "B_{n,k}^j");
    auto* ap = app.add_subcommand("apoly", "A_{n,k}^j (k < 0)");
    for (auto* sub : {bp, ap}) {
        sub->add_option("--n", o.n)->required();
        sub->add_option("--k", o.k)->required();
        sub->add_option("--j", o.j);
        format_opt(sub);
    }

    auto* ser = app.add_subcommand("series", "J_0, J_inf or J of lambda_{n+1}(k)");
    ser->add_option("--n", o.n)->required();
    ser->add_option("--k", o.k)->required();
    ser->add_option("--kind", o.kind)->check(CLI::IsMember({"j0", "jinf", "j"}));
    ser->add_option("--window", o.window, "lo..hi");
    format_opt(ser);

    auto* idx = app.add_subcommand("index", "Index series of the lifted operator, both constructions");
    idx->add_option("--n", o.n)->required();
    idx->add_option("--k", o.k)->required();
    idx->add_option("--window", o.window, "lo..hi (default -10..10)");
    format_opt(idx);

    auto* lef = app.add_subcommand("lefschetz", "Fixed-point formula vs Euler characteristic");
    lef->add_option("--n", o.n)->required();
    lef->add_option("--f", o.f, "Laurent polynomial in t1..t{n+1}, t")->required();
    lef->add_option("--seed", o.seed);
    lef->add_option("--points", o.points, "Number of numeric checks");
    format_opt(lef);

    auto* ver = app.add_subcommand("verify", "Run every property suite");
    ver->add_option("--n-max", o.n_max);
    ver->add_option("--k-range", o.k_range, "lo..hi");
    ver->add_option("--seed", o.seed);
    ver->add_option("--jobs", o.jobs);
    format_opt(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*chi_cmd) {
            if (o.n < 0) throw UsageError("--n must be nonnegative");
            return cmd_poly(o, out, chi(o.n, o.l));
        }
        if (*coh) return cmd_cohomology(o, out);
        if (*bp) {
            if (o.n < 0) throw UsageError("--n must be nonnegative");
            return cmd_poly(o, out, b_poly(o.n, o.k, o.j));
        }
        if (*ap) {
            if (o.n < 0) throw UsageError("--n must be nonnegative");
            return cmd_poly(o, out, a_poly(o.n, o.k, o.j));
        }
        if (*ser) return cmd_series(o, out);
        if (*idx) return cmd_index(o, out);
        if (*lef) return cmd_lefschetz(o, out);
        if (*ver) return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        // Bad parameters (domain, range, parse errors) surface as usage errors.
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}

}  // namespace eqidx::cli
