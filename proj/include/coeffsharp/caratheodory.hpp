#pragma once

// Parametrization of the first three coefficients of a Caratheodory function
// p(z) = 1 + c1 z + c2 z^2 + ... (Re p > 0) by a triple (tau1, tau2, tau3),
// the extremal p on each boundary stratum, and the Schwarz-function bridge
// omega = (p - 1) / (p + 1).

#include <cmath>
#include <optional>

#include "series.hpp"

namespace coeffsharp {

/// Slack for |tau| <= 1 and for deciding |tau| == 1.
inline constexpr double kBoundaryTolerance = 1e-12;
/// Slack for the class bound |c_n| <= 2.
inline constexpr double kCoefficientTolerance = 1e-9;

struct CaratheodoryPoint {
    double tau1 = 0.0;
    Complex tau2{};
    Complex tau3{};

    void validate() const
    {
        detail::require(std::isfinite(tau1) && tau1 >= 0.0 && tau1 <= 1.0, "tau1 must lie in [0, 1]");
        detail::require(scalar_traits<Complex>::is_finite(tau2) && std::abs(tau2) <= 1.0 + kBoundaryTolerance,
                        "|tau2| must not exceed 1");
        detail::require(scalar_traits<Complex>::is_finite(tau3) && std::abs(tau3) <= 1.0 + kBoundaryTolerance,
                        "|tau3| must not exceed 1");
    }

    friend bool operator==(const CaratheodoryPoint&, const CaratheodoryPoint&) = default;
};

template <class T>
struct SchwarzCoeffsT {
    T c1{};
    T c2{};
    T c3{};
    std::optional<T> c4;

    friend bool operator==(const SchwarzCoeffsT&, const SchwarzCoeffsT&) = default;
};

using SchwarzCoeffs = SchwarzCoeffsT<Complex>;

inline void validate(const SchwarzCoeffs& c)
{
    const double lim = 2.0 + kCoefficientTolerance;
    detail::require(std::abs(c.c1) <= lim && std::abs(c.c2) <= lim && std::abs(c.c3) <= lim,
                    "Caratheodory coefficients satisfy |c_n| <= 2");
    if (c.c4) {
        detail::require(std::abs(*c.c4) <= lim, "Caratheodory coefficients satisfy |c_n| <= 2");
    }
}

namespace detail {

// Hot-path form used by the grid searches; the caller guarantees validity.
inline SchwarzCoeffs coeffs_from_point_unchecked(double t1, Complex t2, Complex t3)
{
    const double s = 1.0 - t1 * t1;
    const double r2 = std::norm(t2);
    SchwarzCoeffs c;
    c.c1 = {2.0 * t1, 0.0};
    c.c2 = 2.0 * t1 * t1 + 2.0 * s * t2;
    c.c3 = 2.0 * t1 * t1 * t1 + 4.0 * s * t1 * t2 - 2.0 * s * t1 * t2 * t2 + 2.0 * s * (1.0 - r2) * t3;
    return c;
}

} // namespace detail

/// c1, c2, c3 of the Caratheodory function with parameters pt.
inline SchwarzCoeffs coeffs_from_point(const CaratheodoryPoint& pt)
{
    pt.validate();
    return detail::coeffs_from_point_unchecked(pt.tau1, pt.tau2, pt.tau3);
}

/// Which boundary stratum carries a unique extremal p.
enum class Stratum { tau1_unimodular, tau2_unimodular, tau3_unimodular };

inline std::optional<Stratum> stratum_of(const CaratheodoryPoint& pt)
{
    auto on_circle = [](double r) { return std::abs(r - 1.0) <= kBoundaryTolerance; };
    if (on_circle(pt.tau1)) {
        return Stratum::tau1_unimodular;
    }
    if (on_circle(std::abs(pt.tau2))) {
        return Stratum::tau2_unimodular;
    }
    if (on_circle(std::abs(pt.tau3))) {
        return Stratum::tau3_unimodular;
    }
    return std::nullopt;
}

/// Series of the unique p in the class whose leading coefficients are given
/// by pt, for pt on one of the three boundary strata.
inline ComplexSeries extremal_p_series(const CaratheodoryPoint& pt, std::size_t order)
{
    pt.validate();
    const auto stratum = stratum_of(pt);
    detail::require(stratum.has_value(), "extremal_p_series: point is interior to every stratum");

    const Complex one{1.0, 0.0};
    const Complex t1{pt.tau1, 0.0};
    const Complex t2 = pt.tau2;
    const Complex t3 = pt.tau3;
    const Complex t1c = std::conj(t1);
    const Complex t2c = std::conj(t2);

    std::vector<Complex> num(order + 1, Complex{});
    std::vector<Complex> den(order + 1, Complex{});
    auto put = [&](std::vector<Complex>& v, std::size_t k, Complex x) {
        if (k <= order) {
            v[k] = x;
        }
    };

    switch (*stratum) {
    case Stratum::tau1_unimodular:
        put(num, 0, one);
        put(num, 1, t1);
        put(den, 0, one);
        put(den, 1, -t1);
        break;
    case Stratum::tau2_unimodular:
        put(num, 0, one);
        put(num, 1, t1c * t2 + t1);
        put(num, 2, t2);
        put(den, 0, one);
        put(den, 1, t1c * t2 - t1);
        put(den, 2, -t2);
        break;
    case Stratum::tau3_unimodular:
        put(num, 0, one);
        put(num, 1, t2c * t3 + t1c * t2 + t1);
        put(num, 2, t1c * t3 + t1 * t2c * t3 + t2);
        put(num, 3, t3);
        put(den, 0, one);
        put(den, 1, t2c * t3 + t1c * t2 - t1);
        put(den, 2, t1c * t3 - t1 * t2c * t3 - t2);
        put(den, 3, -t3);
        break;
    }
    return divide(ComplexSeries(std::move(num)), ComplexSeries(std::move(den)));
}

/// omega = (p - 1) / (p + 1). Requires p(0) = 1.
template <SeriesScalar T>
TruncatedSeries<T> schwarz_from_p(const TruncatedSeries<T>& p)
{
    detail::require(p[0] == from_int<T>(1), "schwarz_from_p: p must have unit constant term");
    const auto one = TruncatedSeries<T>::constant(from_int<T>(1), p.order());
    return divide(sub(p, one), add(p, one));
}

/// Reads c1..c3 (and c4 when the order allows) off a series for p.
template <SeriesScalar T>
SchwarzCoeffsT<T> coeffs_of(const TruncatedSeries<T>& p)
{
    detail::require(p.order() >= 3, "coeffs_of: series must have order at least 3");
    SchwarzCoeffsT<T> c{p[1], p[2], p[3], std::nullopt};
    if (p.order() >= 4) {
        c.c4 = p[4];
    }
    return c;
}

} // namespace coeffsharp
