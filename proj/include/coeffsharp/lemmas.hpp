#pragma once

// Auxiliary maximization lemmas used in the case analyses, each paired with
// an empirical counterpart that only evaluates the defining expression.

#include <algorithm>
#include <cmath>
#include <string_view>
#include <utility>

#include "search.hpp"

namespace coeffsharp {

// ---------------------------------------------------------------------------
// Y(A, B, C) = max { |A + B z + C z^2| + 1 - |z|^2 : |z| <= 1 },  A, B, C real.

struct YInput {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

enum class YBranch {
    same_sign_boundary,   // AC >= 0, |B| >= 2(1-|C|):  |A|+|B|+|C|
    same_sign_interior,   // AC >= 0, |B| <  2(1-|C|):  1+|A|+B^2/(4(1-|C|))
    opposite_minus_a,     // AC < 0:  1-|A|+B^2/(4(1-|C|))
    opposite_plus_a,      // AC < 0:  1+|A|+B^2/(4(1+|C|))
    r_drop_c,             // R:  |A|+|B|-|C|
    r_drop_a,             // R: -|A|+|B|+|C|
    r_sqrt,               // R: (|C|+|A|) sqrt(1 - B^2/(4AC))
};

inline constexpr int kYBranchCount = 7;

inline std::string_view name_of(YBranch b)
{
    switch (b) {
    case YBranch::same_sign_boundary: return "same_sign_boundary";
    case YBranch::same_sign_interior: return "same_sign_interior";
    case YBranch::opposite_minus_a: return "opposite_minus_a";
    case YBranch::opposite_plus_a: return "opposite_plus_a";
    case YBranch::r_drop_c: return "r_drop_c";
    case YBranch::r_drop_a: return "r_drop_a";
    case YBranch::r_sqrt: return "r_sqrt";
    }
    return "?";
}

struct YValue {
    double value;
    YBranch branch;
};

/// Closed form of Y with the branch that produced it. Ties on a branch
/// condition go to the first listed branch.
inline YValue y_closed_form_detailed(const YInput& in)
{
    detail::require(std::isfinite(in.A) && std::isfinite(in.B) && std::isfinite(in.C), "Y: inputs must be finite");
    const double a = std::abs(in.A);
    const double b = std::abs(in.B);
    const double c = std::abs(in.C);
    const double B2 = in.B * in.B;

    if (in.A * in.C >= 0.0) {
        if (b >= 2.0 * (1.0 - c)) {
            return {a + b + c, YBranch::same_sign_boundary};
        }
        return {1.0 + a + B2 / (4.0 * (1.0 - c)), YBranch::same_sign_interior};
    }

    const double q = -4.0 * in.A * in.C * (1.0 / (in.C * in.C) - 1.0);
    if (q <= B2 && b < 2.0 * (1.0 - c)) {
        return {1.0 - a + B2 / (4.0 * (1.0 - c)), YBranch::opposite_minus_a};
    }
    if (B2 < std::min(4.0 * (1.0 + c) * (1.0 + c), q)) {
        return {1.0 + a + B2 / (4.0 * (1.0 + c)), YBranch::opposite_plus_a};
    }
    if (c * (b + 4.0 * a) <= a * b) {
        return {a + b - c, YBranch::r_drop_c};
    }
    if (a * b <= c * (b - 4.0 * a)) {
        return {-a + b + c, YBranch::r_drop_a};
    }
    return {(c + a) * std::sqrt(1.0 - B2 / (4.0 * in.A * in.C)), YBranch::r_sqrt};
}

inline double y_closed_form(const YInput& in)
{
    return y_closed_form_detailed(in).value;
}

struct DiskGrid {
    int radii = 200;
    int angles = 720;
    int refine_sweeps = 6;
};

struct DiskMaximum {
    double value;
    Complex argmax;
};

/// Direct maximization of |A + Bz + Cz^2| + 1 - |z|^2 over the closed disk:
/// polar grid (boundary circle and centre included), then alternating
/// golden-section searches in r and theta around the incumbent.
inline DiskMaximum y_brute_force(const YInput& in, const DiskGrid& grid = {})
{
    detail::require(grid.radii >= 100 && grid.angles >= 100, "Y oracle needs at least 100 points per axis");
    auto objective = [&](double r, double th) {
        const Complex z = std::polar(r, th);
        return std::abs(in.A + in.B * z + in.C * z * z) + 1.0 - r * r;
    };

    double best = objective(0.0, 0.0);
    double br = 0.0;
    double bt = 0.0;
    for (int i = 1; i < grid.radii; ++i) {
        const double r = static_cast<double>(i) / (grid.radii - 1);
        for (int j = 0; j < grid.angles; ++j) {
            const double th = kTwoPi * j / grid.angles;
            const double v = objective(r, th);
            if (v > best) {
                best = v;
                br = r;
                bt = th;
            }
        }
    }

    constexpr double inv_phi = 0.6180339887498949;
    auto golden = [&](auto&& g, double lo, double hi) {
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = g(x1);
        double f2 = g(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = g(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = g(x1);
            }
        }
        return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
    };

    double dr = 1.0 / (grid.radii - 1);
    double dt = kTwoPi / grid.angles;
    for (int sweep = 0; sweep < grid.refine_sweeps; ++sweep) {
        auto [r, vr] = golden([&](double x) { return objective(x, bt); }, std::max(0.0, br - dr),
                              std::min(1.0, br + dr));
        if (vr > best) {
            best = vr;
            br = r;
        }
        auto [t, vt] = golden([&](double x) { return objective(br, x); }, bt - dt, bt + dt);
        if (vt > best) {
            best = vt;
            bt = t;
        }
        dr *= 0.5;
        dt *= 0.5;
    }
    return {best, std::polar(br, bt)};
}

// ---------------------------------------------------------------------------
// |c2 - v c1^2| over the class.

inline double lemma23_bound(double v)
{
    detail::require(std::isfinite(v), "lemma23: v must be finite");
    if (v < 0.0) {
        return -4.0 * v + 2.0;
    }
    if (v <= 1.0) {
        return 2.0;
    }
    return 4.0 * v - 2.0;
}

struct SampleGrid {
    int tau1 = 101;
    int r = 21;
    int theta = 72;
};

namespace detail {

inline SearchConfig as_config(const SampleGrid& g)
{
    SearchConfig cfg;
    cfg.grid_tau1 = g.tau1;
    cfg.grid_r = g.r;
    cfg.grid_theta = g.theta;
    cfg.refinement_rounds = 0;
    return cfg;
}

} // namespace detail

/// Largest sampled |c2 - v c1^2| with (c1, c2) from the parametrization.
inline double lemma23_empirical(double v, const SampleGrid& grid = {}, unsigned threads = default_threads())
{
    auto f = [v](double t1, Complex t2, Complex) {
        const double c1 = 2.0 * t1;
        const Complex c2 = 2.0 * t1 * t1 + 2.0 * (1.0 - t1 * t1) * t2;
        return std::abs(c2 - v * c1 * c1);
    };
    return grid_search(f, SearchDomain::for_params(1), detail::as_config(grid), Sense::maximize, threads).value;
}

// ---------------------------------------------------------------------------
// |c3 - 2B c1 c2 + D c1^3| <= 2 on 0 <= B <= 1, B(2B-1) <= D <= B.

inline bool lemma24_hypothesis(double B, double D)
{
    return B >= 0.0 && B <= 1.0 && B * (2.0 * B - 1.0) <= D && D <= B;
}

struct Lemma24Report {
    double B;
    double D;
    double max_value;
    CaratheodoryPoint argmax;
    bool within_bound;
};

inline Lemma24Report lemma24_check(double B, double D, const SampleGrid& grid = {21, 11, 24},
                                   unsigned threads = default_threads())
{
    detail::require(std::isfinite(B) && std::isfinite(D) && lemma24_hypothesis(B, D),
                    "lemma24: requires 0 <= B <= 1 and B(2B-1) <= D <= B");
    auto f = [B, D](double t1, Complex t2, Complex t3) {
        const auto c = detail::coeffs_from_point_unchecked(t1, t2, t3);
        return std::abs(c.c3 - 2.0 * B * c.c1 * c.c2 + D * c.c1 * c.c1 * c.c1);
    };
    const auto res = grid_search(f, SearchDomain::for_params(2), detail::as_config(grid), Sense::maximize, threads);
    return {B, D, res.value, res.point, res.value <= 2.0 + kCoefficientTolerance};
}

/// Lemma 2.4 over an n x n grid of its hypothesis region: B uniform on
/// [0,1], D uniform on [B(2B-1), B].
inline std::vector<Lemma24Report> lemma24_region_sweep(int n = 11, const SampleGrid& grid = {11, 6, 12},
                                                       unsigned threads = default_threads())
{
    detail::require(n >= 2, "lemma24 sweep needs n >= 2");
    std::vector<Lemma24Report> out;
    for (int i = 0; i < n; ++i) {
        const double B = static_cast<double>(i) / (n - 1);
        const double lo = B * (2.0 * B - 1.0);
        for (int j = 0; j < n; ++j) {
            const double D = j == n - 1 ? B : lo + (B - lo) * j / (n - 1);
            out.push_back(lemma24_check(B, D, grid, threads));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Psi_+(c1, c2) = |B2 c1^2 + B3 c2| - B1 |c1|  and  Psi_- = -Psi_+.

struct PsiInput {
    double B1 = 1.0;
    Complex B2{};
    double B3 = 0.0;

    void validate() const
    {
        detail::require(std::isfinite(B1) && B1 > 0.0, "Psi: B1 must be positive");
        detail::require(scalar_traits<Complex>::is_finite(B2) && std::isfinite(B3), "Psi: inputs must be finite");
    }

    /// B4 = |4 B2 + 2 B3|.
    double B4() const { return std::abs(4.0 * B2 + 2.0 * B3); }
};

inline double psi_functional(const PsiInput& in, Complex c1, Complex c2)
{
    return std::abs(in.B2 * c1 * c1 + in.B3 * c2) - in.B1 * std::abs(c1);
}

/// Upper bound for Psi_+.
inline double psi_plus_bound(const PsiInput& in)
{
    in.validate();
    if (std::abs(2.0 * in.B2 + in.B3) >= std::abs(in.B3) + in.B1) {
        return std::abs(4.0 * in.B2 + 2.0 * in.B3) - 2.0 * in.B1;
    }
    return 2.0 * std::abs(in.B3);
}

/// Upper bound for Psi_-.
inline double psi_minus_bound(const PsiInput& in)
{
    in.validate();
    const double b3 = std::abs(in.B3);
    const double b4 = in.B4();
    if (in.B1 >= b4 + 2.0 * b3) {
        return 2.0 * in.B1 - b4;
    }
    if (in.B1 * in.B1 <= 2.0 * b3 * (b4 + 2.0 * b3)) {
        return 2.0 * in.B1 * std::sqrt(2.0 * b3 / (b4 + 2.0 * b3));
    }
    return 2.0 * b3 + in.B1 * in.B1 / (b4 + 2.0 * b3);
}

struct PsiEmpirical {
    double max_plus;   // sup of Psi_+
    double max_minus;  // sup of Psi_-, i.e. -inf of Psi_+
    std::uint64_t evaluations;
};

/// Sampled extremes of Psi_+ over the class, with local refinement.
inline PsiEmpirical psi_empirical(const PsiInput& in, const SearchConfig& cfg = {101, 21, 48, 6, 0.35, 7, 1e-3, 1e-9},
                                  unsigned threads = default_threads())
{
    in.validate();
    auto f = [&in](double t1, Complex t2, Complex) {
        const Complex c1{2.0 * t1, 0.0};
        const Complex c2 = 2.0 * t1 * t1 + 2.0 * (1.0 - t1 * t1) * t2;
        return psi_functional(in, c1, c2);
    };
    const auto dom = SearchDomain::for_params(1);
    const auto hi = grid_search(f, dom, cfg, Sense::maximize, threads);
    const auto lo = grid_search(f, dom, cfg, Sense::minimize, threads);
    return {hi.value, -lo.value, hi.evaluations + lo.evaluations};
}

// ---------------------------------------------------------------------------
// Scalar profiles from the Hankel case analyses.
//   phi(t) = 12 - 4t^2 - 5t^4                       on [0, 1]
//   Psi(t) = 12 + 12t^2 - 33t^4                     on [0, 1]
//   Phi(t) = (12 - 8t^2 + 5t^4) sqrt((52 - 16t^2) / (9(3 + t^2)))   on [t'', 1]

enum class CaseFunction { phi, Psi, Phi };

/// Positive root t'' of 101 t^4 + 148 t^2 - 60.
inline double case_threshold()
{
    return std::sqrt(4.0 * std::sqrt(721.0) / 101.0 - 74.0 / 101.0);
}

inline Interval case_interval(CaseFunction f)
{
    return f == CaseFunction::Phi ? Interval{case_threshold(), 1.0} : Interval{0.0, 1.0};
}

inline double case_value(CaseFunction f, double t)
{
    const auto iv = case_interval(f);
    detail::require(std::isfinite(t) && t >= iv.lo && t <= iv.hi, "case function argument outside its interval");
    const double t2 = t * t;
    switch (f) {
    case CaseFunction::phi: return 12.0 - 4.0 * t2 - 5.0 * t2 * t2;
    case CaseFunction::Psi: return 12.0 + 12.0 * t2 - 33.0 * t2 * t2;
    case CaseFunction::Phi: return (12.0 - 8.0 * t2 + 5.0 * t2 * t2) * std::sqrt((52.0 - 16.0 * t2) / (9.0 * (3.0 + t2)));
    }
    return 0.0;
}

struct ScalarMaximum {
    double argmax;
    double max;
};

/// Maximum over the function's interval: dense scan plus golden refinement.
inline ScalarMaximum case_maximum(CaseFunction f)
{
    const auto iv = case_interval(f);
    constexpr int n = 10001;
    double bx = iv.lo;
    double bv = case_value(f, iv.lo);
    for (int i = 1; i < n; ++i) {
        const double x = i == n - 1 ? iv.hi : iv.lo + (iv.hi - iv.lo) * i / (n - 1);
        const double v = case_value(f, x);
        if (v > bv) {
            bv = v;
            bx = x;
        }
    }
    const double h = (iv.hi - iv.lo) / (n - 1);
    double lo = std::max(iv.lo, bx - h);
    double hi = std::min(iv.hi, bx + h);
    constexpr double inv_phi = 0.6180339887498949;
    for (int it = 0; it < 100; ++it) {
        const double x1 = hi - inv_phi * (hi - lo);
        const double x2 = lo + inv_phi * (hi - lo);
        if (case_value(f, x1) < case_value(f, x2)) {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    const double xm = 0.5 * (lo + hi);
    if (case_value(f, xm) > bv) {
        return {xm, case_value(f, xm)};
    }
    return {bx, bv};
}

} // namespace coeffsharp
