#pragma once

// Command-line front end: series, eval, verify, lemma.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or hypothesis error.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dynamic_series.hpp"
#include "expr.hpp"
#include "lemmas.hpp"
#include "report.hpp"

namespace coeffsharp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr std::size_t kMaxOrder = 256;

/// Usage or hypothesis problem detected after argument parsing.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

inline double clean_zero(double x)
{
    return x == 0.0 ? 0.0 : x;
}

inline Json complex_json(Complex z)
{
    return Json{{"re", clean_zero(z.real())}, {"im", clean_zero(z.imag())}};
}

inline std::vector<ExprValue> parse_all(const std::vector<std::string>& items)
{
    std::vector<ExprValue> out;
    for (const auto& s : items) {
        try {
            out.push_back(parse_expr(s));
        } catch (const expr_error& e) {
            throw usage_error(e.what());
        }
    }
    return out;
}

inline double real_arg(const ExprValue& v, const char* what)
{
    if (v.value.imag() != 0.0) {
        throw usage_error(std::string(what) + " must be real");
    }
    return v.value.real();
}

inline void write_file(const std::string& path, const Json& doc)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw usage_error("cannot write '" + path + "'");
    }
    f << dump(doc);
}

struct Options {
    // series
    std::string which;
    std::size_t order = 8;
    std::string format = "frac";
    std::vector<std::string> omega;
    // eval
    std::string functional;
    std::vector<std::string> c_args;
    std::vector<std::string> tau_args;
    // verify
    std::string theorem;
    std::string config_path;
    // lemma
    std::string lemma;
    std::vector<std::string> params;
    bool oracle = false;
    // shared
    std::string json_path;
};

inline SearchConfig load_config(const Options& o)
{
    if (o.config_path.empty()) {
        return {};
    }
    try {
        return load_config_file(o.config_path);
    } catch (const format_error& e) {
        throw usage_error(e.what());
    }
}

// ---------------------------------------------------------------------------

inline int cmd_series(const Options& o, std::ostream& out)
{
    const bool decimal = o.format == "dec";
    const std::string started = utc_now();
    AnySeries s = RationalSeries(0);

    if (o.which == "phi0") {
        s = phi0_series<Rational>(o.order);
    } else if (o.which == "f1" || o.which == "f2" || o.which == "f3") {
        const std::size_t n = static_cast<std::size_t>(o.which[1] - '0');
        // computed at a high enough order and truncated back
        s = extremal_function(n, std::max(o.order, n + 1)).truncated(o.order);
    } else {
        if (o.omega.empty()) {
            throw usage_error("custom-omega needs --omega with the coefficients of omega from degree 0");
        }
        if (o.order < 1) {
            throw usage_error("custom-omega needs --order >= 1");
        }
        const auto vals = parse_all(o.omega);
        if (vals.size() > o.order + 1) {
            throw usage_error("--omega has more coefficients than --order allows");
        }
        bool exact = true;
        for (const auto& v : vals) {
            exact = exact && v.exact.has_value();
        }
        try {
            if (exact) {
                std::vector<Rational> w;
                for (const auto& v : vals) {
                    w.push_back(*v.exact);
                }
                s = starlike_from_schwarz(RationalSeries(std::move(w)).padded(o.order), o.order);
            } else {
                std::vector<Complex> w;
                for (const auto& v : vals) {
                    w.push_back(v.value);
                }
                s = starlike_from_schwarz(ComplexSeries(std::move(w)).padded(o.order), o.order);
            }
        } catch (const precondition_error& e) {
            throw usage_error(e.what());
        }
    }

    out << to_string(s, decimal) << "\n";

    if (!o.json_path.empty()) {
        Json coeffs = Json::array();
        std::visit(
            [&](const auto& x) {
                using S = std::decay_t<decltype(x)>;
                for (std::size_t k = 0; k <= x.order(); ++k) {
                    if constexpr (std::is_same_v<S, RationalSeries>) {
                        coeffs.push_back(to_json(x[k]));
                    } else {
                        coeffs.push_back(complex_json(x[k]));
                    }
                }
            },
            s);
        Json res{{"which", o.which}, {"order", o.order}, {"mode", mode_of(s)}, {"coefficients", coeffs}};
        write_file(o.json_path, make_manifest("series", SearchConfig{}, started, utc_now(), res));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

inline int cmd_eval(const Options& o, std::ostream& out)
{
    const std::string started = utc_now();
    const auto id = parse_functional(o.functional);
    if (!id) {
        throw usage_error("unknown functional '" + o.functional + "'");
    }
    const bool has_c = !o.c_args.empty();
    const bool has_tau = !o.tau_args.empty();
    if (has_c == has_tau) {
        throw usage_error("give exactly one of --c or --tau");
    }

    Json res{{"functional", std::string(name_of(*id))}};
    FunctionalValue fv;
    std::optional<Rational> exact;
    try {
        if (has_c) {
            if (o.c_args.size() < 3 || o.c_args.size() > 4) {
                throw usage_error("--c takes c1 c2 c3 [c4]");
            }
            const auto v = parse_all(o.c_args);
            SchwarzCoeffs c{v[0].value, v[1].value, v[2].value, std::nullopt};
            if (v.size() == 4) {
                c.c4 = v[3].value;
            }
            validate(c);
            fv = evaluate(*id, c);
            Json in = Json::array();
            for (const auto& x : v) {
                in.push_back(complex_json(x.value));
            }
            res["inputs"] = Json{{"c", in}};
            if (v[0].exact && v[1].exact && v[2].exact) {
                exact = evaluate_functional(*id, SchwarzCoeffsT<Rational>{*v[0].exact, *v[1].exact, *v[2].exact, {}});
            }
        } else {
            if (o.tau_args.size() != 3) {
                throw usage_error("--tau takes tau1 tau2 tau3");
            }
            const auto v = parse_all(o.tau_args);
            CaratheodoryPoint pt{real_arg(v[0], "tau1"), v[1].value, v[2].value};
            fv = evaluate(*id, pt);
            res["inputs"] = Json{{"tau", to_json(pt)}};
        }
    } catch (const precondition_error& e) {
        throw usage_error(e.what());
    }

    if (const auto* z = std::get_if<Complex>(&fv.value)) {
        res["value"] = complex_json(*z);
    } else {
        res["value"] = clean_zero(std::get<double>(fv.value));
    }
    res["magnitude"] = fv.magnitude();
    if (exact) {
        res["exact"] = to_json(*exact);
    }

    Json doc{{"schema", kSchemaVersion}};
    doc.update(res);
    out << doc.dump(2) << "\n";
    if (!o.json_path.empty()) {
        write_file(o.json_path, make_manifest("eval", load_config(o), started, utc_now(), res));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

inline void print_table(const std::vector<VerificationReport>& reports, std::ostream& out)
{
    out << std::left << std::setw(18) << "theorem" << std::setw(8) << "sense" << std::setw(14) << "bound"
        << std::setw(24) << "empirical" << std::setw(14) << "gap" << std::setw(12) << "evaluations"
        << "status\n";
    int passed = 0;
    for (const auto& r : reports) {
        std::ostringstream gap;
        gap << std::scientific << std::setprecision(2) << r.gap;
        out << std::left << std::setw(18) << name_of(r.theorem_id) << std::setw(8)
            << (r.sense == Sense::maximize ? "max" : "min") << std::setw(14) << r.theoretical_bound.expr
            << std::setw(24) << ::coeffsharp::detail::format_double(r.empirical_extremum) << std::setw(14)
            << gap.str() << std::setw(12) << r.evaluations << (r.passed ? "PASS" : "FAIL") << "\n";
        passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << reports.size() << " passed\n";
}

inline int cmd_verify(const Options& o, std::ostream& out)
{
    const std::string started = utc_now();
    std::vector<TheoremId> ids;
    if (o.theorem == "all") {
        ids.assign(kAllTheorems.begin(), kAllTheorems.end());
    } else if (auto id = parse_theorem(o.theorem)) {
        ids.push_back(*id);
    } else {
        throw usage_error("unknown theorem id '" + o.theorem + "'");
    }
    const SearchConfig cfg = load_config(o);

    std::vector<VerificationReport> reports;
    for (auto id : ids) {
        reports.push_back(verify(id, cfg));
    }
    print_table(reports, out);

    const Json arr = reports_to_json(reports);
    if (!o.json_path.empty()) {
        write_file(o.json_path, make_manifest("verify " + o.theorem, cfg, started, utc_now(), arr));
    }
    bool all = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!reports[i].passed) {
            all = false;
            out << "FAILED:\n" << arr[i].dump(2) << "\n";
        }
    }
    return all ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

inline int cmd_lemma(const Options& o, std::ostream& out)
{
    // L41 leads with a side token that is not an expression
    const auto vals = o.lemma == "L41" ? std::vector<ExprValue>{} : parse_all(o.params);
    auto need = [&](std::size_t n, const char* usage) {
        if (vals.size() != n) {
            throw usage_error(std::string("lemma ") + o.lemma + " takes " + usage);
        }
    };

    Json doc{{"schema", kSchemaVersion}, {"lemma", o.lemma}};
    if (o.lemma == "Y") {
        need(3, "A B C");
        const YInput in{real_arg(vals[0], "A"), real_arg(vals[1], "B"), real_arg(vals[2], "C")};
        const auto y = y_closed_form_detailed(in);
        doc["params"] = Json{{"A", in.A}, {"B", in.B}, {"C", in.C}};
        doc["value"] = y.value;
        doc["branch"] = std::string(name_of(y.branch));
        if (o.oracle) {
            const auto bf = y_brute_force(in);
            doc["oracle"] = bf.value;
            doc["oracle_argmax"] = complex_json(bf.argmax);
            doc["discrepancy"] = std::abs(bf.value - y.value);
        }
    } else if (o.lemma == "L23") {
        need(1, "v");
        const double v = real_arg(vals[0], "v");
        doc["params"] = Json{{"v", v}};
        doc["value"] = lemma23_bound(v);
        if (o.oracle) {
            const double e = lemma23_empirical(v);
            doc["oracle"] = e;
            doc["discrepancy"] = std::abs(e - lemma23_bound(v));
        }
    } else if (o.lemma == "L24") {
        need(2, "B D");
        const double B = real_arg(vals[0], "B");
        const double D = real_arg(vals[1], "D");
        if (!lemma24_hypothesis(B, D)) {
            throw usage_error("lemma L24 requires 0 <= B <= 1 and B(2B-1) <= D <= B");
        }
        doc["params"] = Json{{"B", B}, {"D", D}};
        doc["value"] = 2.0;
        if (o.oracle) {
            const auto rep = lemma24_check(B, D);
            doc["oracle"] = rep.max_value;
            doc["oracle_argmax"] = to_json(rep.argmax);
            doc["within_bound"] = rep.within_bound;
        }
    } else if (o.lemma == "L41") {
        if (o.params.size() != 4 || (o.params[0] != "plus" && o.params[0] != "minus")) {
            throw usage_error("lemma L41 takes plus|minus B1 B2 B3");
        }
        const auto nums = parse_all({o.params.begin() + 1, o.params.end()});
        const PsiInput in{real_arg(nums[0], "B1"), nums[1].value, real_arg(nums[2], "B3")};
        const bool plus = o.params[0] == "plus";
        double bound = 0.0;
        try {
            bound = plus ? psi_plus_bound(in) : psi_minus_bound(in);
        } catch (const precondition_error& e) {
            throw usage_error(e.what());
        }
        doc["params"] = Json{{"side", o.params[0]}, {"B1", in.B1}, {"B2", complex_json(in.B2)}, {"B3", in.B3}};
        doc["value"] = bound;
        if (o.oracle) {
            const auto emp = psi_empirical(in);
            const double e = plus ? emp.max_plus : emp.max_minus;
            doc["oracle"] = e;
            doc["discrepancy"] = std::abs(e - bound);
        }
    } else {
        throw usage_error("unknown lemma '" + o.lemma + "' (expected Y, L23, L24 or L41)");
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
}

} // namespace detail

/// Runs the command line; all output goes to out/err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    detail::Options o;
    CLI::App app{"Sharp coefficient bounds for starlike functions subordinate to z + cosh z", "coeffsharp"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "Print the Taylor coefficients of an extremal or custom function");
    series->add_option("which", o.which, "f1, f2, f3, phi0 or custom-omega")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "f3", "phi0", "custom-omega"}));
    series->add_option("--order", o.order, "Truncation order N")->check(CLI::Range(std::size_t{0}, kMaxOrder));
    series->add_option("--format", o.format, "frac (exact) or dec")->check(CLI::IsMember({"frac", "dec"}));
    series->add_option("--omega", o.omega, "Coefficients of omega from degree 0 (custom-omega)");
    series->add_option("--json", o.json_path, "Also write a JSON manifest here");

    auto* eval = app.add_subcommand("eval", "Evaluate a coefficient functional");
    eval->add_option("functional", o.functional, "gamma1 gamma2 gamma3 Gamma1 Gamma2 H21_log H21_inverse "
                                                 "diff_gamma diff_Gamma")
        ->required();
    eval->add_option("--c", o.c_args, "c1 c2 c3 [c4]")->allow_extra_args();
    eval->add_option("--tau", o.tau_args, "tau1 tau2 tau3");
    eval->add_option("--json", o.json_path, "Also write a JSON manifest here");
    eval->add_option("--config", o.config_path, "Config file recorded in the manifest");

    auto* verify_cmd = app.add_subcommand("verify", "Reproduce sharp constants by global search");
    verify_cmd->add_option("theorem", o.theorem, "Theorem id or 'all'")->required();
    verify_cmd->add_option("--config", o.config_path, "key = value search configuration");
    verify_cmd->add_option("--json", o.json_path, "Write the report array here");

    auto* lemma = app.add_subcommand("lemma", "Evaluate an auxiliary lemma, optionally against its oracle");
    lemma->add_option("lemma", o.lemma, "Y, L23, L24 or L41")->required();
    lemma->add_option("params", o.params, "Lemma parameters");
    lemma->add_flag("--oracle", o.oracle, "Also run the brute-force oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        return kExitUsage;
    }

    // "--oracle" after a "--" separator arrives as a positional
    if (auto it = std::remove(o.params.begin(), o.params.end(), "--oracle"); it != o.params.end()) {
        o.params.erase(it, o.params.end());
        o.oracle = true;
    }

    try {
        if (series->parsed()) {
            return detail::cmd_series(o, out);
        }
        if (eval->parsed()) {
            return detail::cmd_eval(o, out);
        }
        if (verify_cmd->parsed()) {
            return detail::cmd_verify(o, out);
        }
        return detail::cmd_lemma(o, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace coeffsharp::cli
