#pragma once

// Truncated power series over an exact (Rational) or floating (Complex)
// coefficient field, with the handful of transcendental operations needed
// to run the subordination pipeline zf'/f = phi0(omega).

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace coeffsharp {

/// Degree-capped power series sum_{k=0}^{N} c_k z^k.
///
/// Values are immutable; every operation returns a new series. Binary
/// operations truncate to the smaller of the two orders.
template <SeriesScalar T>
class TruncatedSeries {
public:
    using scalar_type = T;
    using traits = scalar_traits<T>;

    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, from_int<T>(0)) {}

    /// Series whose order is coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        detail::require(!coeffs_.empty(), "series needs at least one coefficient");
        for (const auto& c : coeffs_) {
            detail::require(traits::is_finite(c), "series coefficients must be finite");
        }
    }

    static TruncatedSeries constant(const T& c, std::size_t order)
    {
        std::vector<T> v(order + 1, from_int<T>(0));
        v[0] = c;
        return TruncatedSeries(std::move(v));
    }

    /// c * z^k, truncated (to zero if k > order).
    static TruncatedSeries monomial(std::size_t k, const T& c, std::size_t order)
    {
        std::vector<T> v(order + 1, from_int<T>(0));
        if (k <= order) {
            v[k] = c;
        }
        return TruncatedSeries(std::move(v));
    }

    static TruncatedSeries identity(std::size_t order) { return monomial(1, from_int<T>(1), order); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const T& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::span<const T> coeffs() const noexcept { return coeffs_; }

    TruncatedSeries truncated(std::size_t n) const
    {
        detail::require(n <= order(), "cannot truncate to a higher order");
        return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
    }

    /// Treat the series as a polynomial and pad with zero coefficients.
    TruncatedSeries padded(std::size_t n) const
    {
        detail::require(n >= order(), "padding cannot lower the order");
        auto v = coeffs_;
        v.resize(n + 1, from_int<T>(0));
        return TruncatedSeries(std::move(v));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<T> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using ComplexSeries = TruncatedSeries<Complex>;

template <SeriesScalar T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b)
{
    const auto n = std::min(a.order(), b.order());
    std::vector<T> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        v[k] = a[k] + b[k];
    }
    return TruncatedSeries<T>(std::move(v));
}

template <SeriesScalar T>
TruncatedSeries<T> sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b)
{
    const auto n = std::min(a.order(), b.order());
    std::vector<T> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        v[k] = a[k] - b[k];
    }
    return TruncatedSeries<T>(std::move(v));
}

template <SeriesScalar T>
TruncatedSeries<T> scale(const TruncatedSeries<T>& a, const T& s)
{
    std::vector<T> v(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        v[k] = a[k] * s;
    }
    return TruncatedSeries<T>(std::move(v));
}

/// Cauchy product truncated to the smaller order.
template <SeriesScalar T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b)
{
    const auto n = std::min(a.order(), b.order());
    std::vector<T> v(n + 1, from_int<T>(0));
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            v[i + j] = v[i + j] + a[i] * b[j];
        }
    }
    return TruncatedSeries<T>(std::move(v));
}

/// a / b. Requires b(0) != 0.
template <SeriesScalar T>
TruncatedSeries<T> divide(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b)
{
    detail::require(b[0] != from_int<T>(0), "divide: divisor must have a nonzero constant term");
    const auto n = std::min(a.order(), b.order());
    std::vector<T> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        T acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc = acc - b[j] * q[k - j];
        }
        q[k] = acc / b[0];
    }
    return TruncatedSeries<T>(std::move(q));
}

/// outer(inner(z)) by Horner's scheme in the series ring. inner(0) must be 0.
template <SeriesScalar T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner)
{
    detail::require(inner[0] == from_int<T>(0), "compose: inner series must have zero constant term");
    const auto n = std::min(outer.order(), inner.order());
    const auto g = inner.truncated(n);
    auto result = TruncatedSeries<T>::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        result = add(mul(result, g), TruncatedSeries<T>::constant(outer[k], n));
    }
    return result;
}

/// exp(a) from (exp a)' = a' exp a. Requires a(0) = 0.
template <SeriesScalar T>
TruncatedSeries<T> exp_series(const TruncatedSeries<T>& a)
{
    detail::require(a[0] == from_int<T>(0), "exp_series: argument must have zero constant term");
    const auto n = a.order();
    std::vector<T> e(n + 1, from_int<T>(0));
    e[0] = from_int<T>(1);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc = from_int<T>(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc = acc + from_int<T>(static_cast<long long>(j)) * a[j] * e[k - j];
        }
        e[k] = acc / from_int<T>(static_cast<long long>(k));
    }
    return TruncatedSeries<T>(std::move(e));
}

/// log(a) from (log a)' = a'/a. Requires a(0) = 1.
template <SeriesScalar T>
TruncatedSeries<T> log_series(const TruncatedSeries<T>& a)
{
    detail::require(a[0] == from_int<T>(1), "log_series: argument must have unit constant term");
    const auto n = a.order();
    std::vector<T> l(n + 1, from_int<T>(0));
    for (std::size_t k = 1; k <= n; ++k) {
        T acc = from_int<T>(static_cast<long long>(k)) * a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc = acc - from_int<T>(static_cast<long long>(j)) * l[j] * a[k - j];
        }
        l[k] = acc / from_int<T>(static_cast<long long>(k));
    }
    return TruncatedSeries<T>(std::move(l));
}

template <SeriesScalar T>
TruncatedSeries<T> cosh_series(const TruncatedSeries<T>& a)
{
    detail::require(a[0] == from_int<T>(0), "cosh_series: argument must have zero constant term");
    const auto ep = exp_series(a);
    const auto em = exp_series(scale(a, from_int<T>(-1)));
    return scale(add(ep, em), from_int<T>(1) / from_int<T>(2));
}

/// Coefficients of int_0^z a(t)/t dt. Requires a(0) = 0.
template <SeriesScalar T>
TruncatedSeries<T> antiderivative_over_t(const TruncatedSeries<T>& a)
{
    detail::require(a[0] == from_int<T>(0), "antiderivative_over_t: argument must have zero constant term");
    std::vector<T> s(a.order() + 1, from_int<T>(0));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        s[k] = a[k] / from_int<T>(static_cast<long long>(k));
    }
    return TruncatedSeries<T>(std::move(s));
}

/// z * a(z) at the same order (top coefficient drops off).
template <SeriesScalar T>
TruncatedSeries<T> shift_up(const TruncatedSeries<T>& a)
{
    std::vector<T> v(a.order() + 1, from_int<T>(0));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        v[k] = a[k - 1];
    }
    return TruncatedSeries<T>(std::move(v));
}

/// phi0(w) = w + cosh(w).
template <SeriesScalar T>
TruncatedSeries<T> phi0_series(std::size_t order)
{
    const auto w = TruncatedSeries<T>::identity(order);
    return add(w, cosh_series(w));
}

/// f(z) = z exp( int_0^z (phi0(omega(t)) - 1)/t dt ), the starlike function
/// with zf'/f = phi0(omega). omega must vanish at 0 and be known through
/// degree order-1.
template <SeriesScalar T>
TruncatedSeries<T> starlike_from_schwarz(const TruncatedSeries<T>& omega, std::size_t order)
{
    detail::require(order >= 1, "starlike_from_schwarz: order must be at least 1");
    detail::require(omega[0] == from_int<T>(0), "starlike_from_schwarz: omega(0) must be 0");
    detail::require(omega.order() + 1 >= order, "starlike_from_schwarz: omega is not known to a high enough degree");
    const auto m = order - 1;
    const auto w = omega.truncated(m);
    const auto composed = compose(phi0_series<T>(m), w);
    const auto integrand = sub(composed, TruncatedSeries<T>::constant(from_int<T>(1), m));
    const auto e = exp_series(antiderivative_over_t(integrand));
    return shift_up(e.padded(order));
}

/// The extremal function f_n with omega(z) = z^n, in exact arithmetic.
inline RationalSeries extremal_function(std::size_t n, std::size_t order)
{
    detail::require(n >= 1, "extremal_function: n must be positive");
    detail::require(order >= n + 1, "extremal_function: order must be at least n + 1");
    return starlike_from_schwarz(RationalSeries::monomial(n, Rational(1), order), order);
}

template <SeriesScalar T>
std::string to_string(const TruncatedSeries<T>& s, bool decimal = false)
{
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (k) {
            out += ", ";
        }
        out += decimal ? scalar_traits<T>::to_decimal(s[k]) : scalar_traits<T>::to_string(s[k]);
    }
    return out;
}

} // namespace coeffsharp
