#pragma once

// JSON and config-file surfaces.
//
// Report files carry "schema": 1. Exact fractions are {"num": n, "den": d}
// (as strings when they do not fit in 64 bits); algebraic constants are
// {"expr": "3/44", "float": 0.0681...}. Config files are flat
// "key = value" lines; '#' starts a comment.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "verifier.hpp"

namespace coeffsharp {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Scalars

inline Json to_json(const Rational& q)
{
    using boost::multiprecision::cpp_int;
    const cpp_int n = boost::multiprecision::numerator(q);
    const cpp_int d = boost::multiprecision::denominator(q);
    const cpp_int lim = std::numeric_limits<std::int64_t>::max();
    Json j;
    if (abs(n) <= lim && d <= lim) {
        j["num"] = n.convert_to<std::int64_t>();
        j["den"] = d.convert_to<std::int64_t>();
    } else {
        j["num"] = n.str();
        j["den"] = d.str();
    }
    return j;
}

inline Rational rational_from_json(const Json& j)
{
    using boost::multiprecision::cpp_int;
    auto part = [](const Json& x) {
        return x.is_string() ? cpp_int(x.get<std::string>()) : cpp_int(x.get<std::int64_t>());
    };
    return Rational(part(j.at("num")), part(j.at("den")));
}

inline Json to_json(const Complex& z)
{
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Complex complex_from_json(const Json& j)
{
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline Json to_json(const CaratheodoryPoint& pt)
{
    return Json{{"tau1", pt.tau1}, {"tau2", to_json(pt.tau2)}, {"tau3", to_json(pt.tau3)}};
}

inline CaratheodoryPoint point_from_json(const Json& j)
{
    return {j.at("tau1").get<double>(), complex_from_json(j.at("tau2")), complex_from_json(j.at("tau3"))};
}

inline Json to_json(const SchwarzCoeffs& c)
{
    Json j{{"c1", to_json(c.c1)}, {"c2", to_json(c.c2)}, {"c3", to_json(c.c3)}};
    if (c.c4) {
        j["c4"] = to_json(*c.c4);
    }
    return j;
}

inline Json to_json(const TheoreticalBound& b)
{
    Json j{{"expr", b.expr}, {"float", b.value}};
    if (b.exact) {
        j["exact"] = to_json(*b.exact);
    }
    return j;
}

inline TheoreticalBound bound_from_json(const Json& j)
{
    TheoreticalBound b{j.at("expr").get<std::string>(), j.at("float").get<double>(), std::nullopt};
    if (j.contains("exact")) {
        b.exact = rational_from_json(j.at("exact"));
    }
    return b;
}

// ---------------------------------------------------------------------------
// SearchConfig

inline Json to_json(const SearchConfig& c)
{
    return Json{
        {"grid_tau1", c.grid_tau1},
        {"grid_r", c.grid_r},
        {"grid_theta", c.grid_theta},
        {"refinement_rounds", c.refinement_rounds},
        {"shrink_factor", c.shrink_factor},
        {"refine_points", c.refine_points},
        {"tolerance_attain", c.tolerance_attain},
        {"tolerance_exceed", c.tolerance_exceed},
    };
}

inline SearchConfig config_from_json(const Json& j)
{
    SearchConfig c;
    c.grid_tau1 = j.at("grid_tau1").get<int>();
    c.grid_r = j.at("grid_r").get<int>();
    c.grid_theta = j.at("grid_theta").get<int>();
    c.refinement_rounds = j.at("refinement_rounds").get<int>();
    c.shrink_factor = j.at("shrink_factor").get<double>();
    c.refine_points = j.at("refine_points").get<int>();
    c.tolerance_attain = j.at("tolerance_attain").get<double>();
    c.tolerance_exceed = j.at("tolerance_exceed").get<double>();
    return c;
}

/// Parses "key = value" text. Every key is optional; unknown keys and
/// malformed values are errors.
inline SearchConfig parse_config_text(const std::string& text)
{
    SearchConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw format_error("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        auto as_int = [&]() {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(val, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != val.size()) {
                throw format_error("config line " + std::to_string(lineno) + ": '" + key + "' needs an integer");
            }
            return v;
        };
        auto as_double = [&]() {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(val, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != val.size()) {
                throw format_error("config line " + std::to_string(lineno) + ": '" + key + "' needs a number");
            }
            return v;
        };
        if (key == "grid_tau1") {
            c.grid_tau1 = as_int();
        } else if (key == "grid_r") {
            c.grid_r = as_int();
        } else if (key == "grid_theta") {
            c.grid_theta = as_int();
        } else if (key == "refinement_rounds") {
            c.refinement_rounds = as_int();
        } else if (key == "shrink_factor") {
            c.shrink_factor = as_double();
        } else if (key == "refine_points") {
            c.refine_points = as_int();
        } else if (key == "tolerance_attain") {
            c.tolerance_attain = as_double();
        } else if (key == "tolerance_exceed") {
            c.tolerance_exceed = as_double();
        } else {
            throw format_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    try {
        c.validate();
    } catch (const precondition_error& e) {
        throw format_error(std::string("config: ") + e.what());
    }
    return c;
}

inline SearchConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw format_error("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

// ---------------------------------------------------------------------------
// VerificationReport

inline Json to_json(const VerificationReport& r)
{
    return Json{
        {"theorem_id", std::string(name_of(r.theorem_id))},
        {"sense", r.sense == Sense::maximize ? "max" : "min"},
        {"theoretical_bound", to_json(r.theoretical_bound)},
        {"empirical_extremum", r.empirical_extremum},
        {"maximizer", to_json(r.maximizer)},
        {"gap", r.gap},
        {"evaluations", r.evaluations},
        {"never_exceeded", r.never_exceeded},
        {"attained", r.attained},
        {"passed", r.passed},
    };
}

inline VerificationReport report_from_json(const Json& j)
{
    VerificationReport r;
    const auto id = parse_theorem(j.at("theorem_id").get<std::string>());
    if (!id) {
        throw format_error("unknown theorem_id in report");
    }
    r.theorem_id = *id;
    r.sense = j.at("sense").get<std::string>() == "min" ? Sense::minimize : Sense::maximize;
    r.theoretical_bound = bound_from_json(j.at("theoretical_bound"));
    r.empirical_extremum = j.at("empirical_extremum").get<double>();
    r.maximizer = point_from_json(j.at("maximizer"));
    r.gap = j.at("gap").get<double>();
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.never_exceeded = j.at("never_exceeded").get<bool>();
    r.attained = j.at("attained").get<bool>();
    r.passed = j.at("passed").get<bool>();
    return r;
}

/// Wraps a payload in the run manifest written by every CLI command.
inline Json make_manifest(const std::string& command, const SearchConfig& cfg, const std::string& started,
                          const std::string& finished, Json results)
{
    return Json{
        {"schema", kSchemaVersion},
        {"command", command},
        {"tool_version", kToolVersion},
        {"config", to_json(cfg)},
        {"started", started},
        {"finished", finished},
        {"results", std::move(results)},
    };
}

inline Json reports_to_json(const std::vector<VerificationReport>& reports)
{
    Json arr = Json::array();
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

inline std::vector<VerificationReport> reports_from_json(const Json& arr)
{
    std::vector<VerificationReport> out;
    for (const auto& j : arr) {
        out.push_back(report_from_json(j));
    }
    return out;
}

/// Canonical text of a JSON document as written to disk.
inline std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace coeffsharp
