#pragma once

// Reproduces each sharp constant by global search over the parameter domain
// and checks the explicit extremal witnesses.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "functionals.hpp"
#include "search.hpp"

namespace coeffsharp {

enum class TheoremId {
    gamma1,
    gamma2,
    gamma3,
    H21_log,
    Gamma1,
    Gamma2,
    H21_inverse,
    diff_gamma_upper,
    diff_gamma_lower,
    diff_Gamma_upper,
    diff_Gamma_lower,
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::gamma1,           TheoremId::gamma2,           TheoremId::gamma3,           TheoremId::H21_log,
    TheoremId::Gamma1,           TheoremId::Gamma2,           TheoremId::H21_inverse,      TheoremId::diff_gamma_upper,
    TheoremId::diff_gamma_lower, TheoremId::diff_Gamma_upper, TheoremId::diff_Gamma_lower,
};

inline std::string_view name_of(TheoremId id)
{
    switch (id) {
    case TheoremId::gamma1: return "gamma1";
    case TheoremId::gamma2: return "gamma2";
    case TheoremId::gamma3: return "gamma3";
    case TheoremId::H21_log: return "H21_log";
    case TheoremId::Gamma1: return "Gamma1";
    case TheoremId::Gamma2: return "Gamma2";
    case TheoremId::H21_inverse: return "H21_inverse";
    case TheoremId::diff_gamma_upper: return "diff_gamma_upper";
    case TheoremId::diff_gamma_lower: return "diff_gamma_lower";
    case TheoremId::diff_Gamma_upper: return "diff_Gamma_upper";
    case TheoremId::diff_Gamma_lower: return "diff_Gamma_lower";
    }
    return "?";
}

inline std::optional<TheoremId> parse_theorem(std::string_view s)
{
    for (auto id : kAllTheorems) {
        if (name_of(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

/// A sharp constant: printable exact form, float value, and the exact
/// rational when there is one.
struct TheoreticalBound {
    std::string expr;
    double value = 0.0;
    std::optional<Rational> exact;

    friend bool operator==(const TheoreticalBound&, const TheoreticalBound&) = default;
};

struct TargetSpec {
    TheoremId id;
    FunctionalId functional;
    Sense sense;
    int complex_params;  // how many of (tau2, tau3) the functional depends on
    bool signed_value;   // moduli differences are searched as signed reals
    TheoreticalBound bound;
};

inline TargetSpec target_spec(TheoremId id)
{
    auto rational = [](long long p, long long q, const char* expr) {
        return TheoreticalBound{expr, static_cast<double>(p) / static_cast<double>(q), Rational(p, q)};
    };
    using F = FunctionalId;
    switch (id) {
    case TheoremId::gamma1: return {id, F::gamma1, Sense::maximize, 0, false, rational(1, 2, "1/2")};
    case TheoremId::gamma2: return {id, F::gamma2, Sense::maximize, 1, false, rational(1, 4, "1/4")};
    case TheoremId::gamma3: return {id, F::gamma3, Sense::maximize, 2, false, rational(1, 6, "1/6")};
    case TheoremId::H21_log: return {id, F::H21_log, Sense::maximize, 2, false, rational(1, 16, "1/16")};
    case TheoremId::Gamma1: return {id, F::Gamma1, Sense::maximize, 0, false, rational(1, 2, "1/2")};
    case TheoremId::Gamma2: return {id, F::Gamma2, Sense::maximize, 1, false, rational(3, 8, "3/8")};
    case TheoremId::H21_inverse:
        return {id, F::H21_log_inverse, Sense::maximize, 2, false, rational(3, 44, "3/44")};
    case TheoremId::diff_gamma_upper: return {id, F::diff_gamma, Sense::maximize, 1, true, rational(1, 4, "1/4")};
    case TheoremId::diff_gamma_lower:
        return {id, F::diff_gamma, Sense::minimize, 1, true, {"-1/sqrt(6)", -1.0 / std::sqrt(6.0), std::nullopt}};
    case TheoremId::diff_Gamma_upper: return {id, F::diff_Gamma, Sense::maximize, 1, true, rational(1, 4, "1/4")};
    case TheoremId::diff_Gamma_lower:
        return {id, F::diff_Gamma, Sense::minimize, 1, true, {"-1/sqrt(10)", -1.0 / std::sqrt(10.0), std::nullopt}};
    }
    return {};
}

namespace detail {

// Searched quantity at one parameter point: |functional|, or the signed
// moduli difference.
inline double target_value(const TargetSpec& tgt, double t1, Complex t2, Complex t3)
{
    const auto c = coeffs_from_point_unchecked(t1, t2, t3);
    switch (tgt.functional) {
    case FunctionalId::gamma1: return std::abs(c.c1) * 0.25;
    case FunctionalId::Gamma1: return std::abs(c.c1) * 0.25;
    case FunctionalId::diff_gamma: return moduli_diff_gamma(c);
    case FunctionalId::diff_Gamma: return moduli_diff_Gamma(c);
    case FunctionalId::H21_log: return std::abs(hankel_log(c));
    case FunctionalId::H21_log_inverse: return std::abs(hankel_log_inverse(c));
    default: return std::abs(evaluate_functional(tgt.functional, c));
    }
}

} // namespace detail

/// Searched quantity for a theorem at a point (validated).
inline double evaluate_target(TheoremId id, const CaratheodoryPoint& pt)
{
    pt.validate();
    return detail::target_value(target_spec(id), pt.tau1, pt.tau2, pt.tau3);
}

struct VerificationReport {
    TheoremId theorem_id{};
    TheoreticalBound theoretical_bound;
    Sense sense = Sense::maximize;
    double empirical_extremum = 0.0;
    CaratheodoryPoint maximizer;
    /// Distance from the empirical extremum to the bound, measured inward:
    /// bound - empirical for maxima, empirical - bound for minima.
    double gap = 0.0;
    std::uint64_t evaluations = 0;
    bool never_exceeded = false;
    bool attained = false;
    bool passed = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Search restricted to an arbitrary sub-box of the parameter domain.
inline VerificationReport verify_on(TheoremId id, const SearchConfig& cfg, const SearchDomain& dom,
                                    unsigned threads = default_threads())
{
    const auto tgt = target_spec(id);
    auto f = [&tgt](double t1, Complex t2, Complex t3) { return detail::target_value(tgt, t1, t2, t3); };
    const auto res = grid_search(f, dom, cfg, tgt.sense, threads);

    VerificationReport rep;
    rep.theorem_id = id;
    rep.theoretical_bound = tgt.bound;
    rep.sense = tgt.sense;
    rep.empirical_extremum = res.value;
    rep.maximizer = res.point;
    rep.evaluations = res.evaluations;
    rep.gap = tgt.sense == Sense::maximize ? tgt.bound.value - res.value : res.value - tgt.bound.value;
    rep.never_exceeded = rep.gap >= -cfg.tolerance_exceed;
    rep.attained = rep.gap <= cfg.tolerance_attain;
    rep.passed = rep.never_exceeded && rep.attained;
    return rep;
}

/// Search over the full domain of the theorem's functional. Coordinates the
/// functional does not depend on are pinned to 0.
inline VerificationReport verify(TheoremId id, const SearchConfig& cfg, unsigned threads = default_threads())
{
    return verify_on(id, cfg, SearchDomain::for_params(target_spec(id).complex_params), threads);
}

inline std::vector<VerificationReport> verify_all(const SearchConfig& cfg, unsigned threads = default_threads())
{
    std::vector<VerificationReport> out;
    out.reserve(kAllTheorems.size());
    for (auto id : kAllTheorems) {
        out.push_back(verify(id, cfg, threads));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Explicit extremal witnesses.

struct Witness {
    TheoremId theorem_id{};
    CaratheodoryPoint point;
    SchwarzCoeffs coeffs;
    FunctionalValue value;
    /// The searched quantity at the witness (|value| or the signed difference).
    double target = 0.0;
    /// Exact target when the witness coefficients are rational.
    std::optional<Rational> exact_target;
};

namespace detail {

struct WitnessSeed {
    CaratheodoryPoint point;
    std::optional<SchwarzCoeffsT<Rational>> rational_c;
};

inline WitnessSeed witness_seed(TheoremId id)
{
    const SchwarzCoeffsT<Rational> f1{Rational(2), Rational(2), Rational(2), std::nullopt};
    const SchwarzCoeffsT<Rational> f2{Rational(0), Rational(2), Rational(0), std::nullopt};
    const SchwarzCoeffsT<Rational> f3{Rational(0), Rational(0), Rational(2), std::nullopt};
    switch (id) {
    case TheoremId::gamma1:
    case TheoremId::Gamma1:
    case TheoremId::Gamma2: return {{1.0, {0.0, 0.0}, {0.0, 0.0}}, f1};
    case TheoremId::gamma2:
    case TheoremId::H21_log:
    case TheoremId::diff_gamma_upper:
    case TheoremId::diff_Gamma_upper: return {{0.0, {1.0, 0.0}, {0.0, 0.0}}, f2};
    case TheoremId::gamma3: return {{0.0, {0.0, 0.0}, {1.0, 0.0}}, f3};
    case TheoremId::H21_inverse: return {{std::sqrt(2.0 / 11.0), {1.0, 0.0}, {1.0, 0.0}}, std::nullopt};
    // c1 = 2 sqrt(2/3), c2 = 2/3
    case TheoremId::diff_gamma_lower: return {{std::sqrt(2.0 / 3.0), {-1.0, 0.0}, {0.0, 0.0}}, std::nullopt};
    // c1 = 2 sqrt(2/5), c2 = 2
    case TheoremId::diff_Gamma_lower: return {{std::sqrt(2.0 / 5.0), {1.0, 0.0}, {0.0, 0.0}}, std::nullopt};
    }
    return {};
}

} // namespace detail

/// The extremal parameter point for a theorem and the functional there.
inline Witness sharpness_witness(TheoremId id)
{
    const auto tgt = target_spec(id);
    const auto seed = detail::witness_seed(id);

    Witness w;
    w.theorem_id = id;
    w.point = seed.point;
    w.coeffs = coeffs_from_point(seed.point);
    w.value = evaluate(tgt.functional, w.coeffs);
    w.target = evaluate_target(id, seed.point);
    if (seed.rational_c) {
        const Rational v = evaluate_functional(tgt.functional, *seed.rational_c);
        w.exact_target = tgt.signed_value ? v : magnitude<Rational>(v);
    }
    return w;
}

} // namespace coeffsharp
