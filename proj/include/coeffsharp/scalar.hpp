#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <concepts>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coeffsharp {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Raised when an argument violates an operation's precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two series of different scalar modes are combined.
class mode_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool cond, const char* what)
{
    if (!cond) {
        throw precondition_error(what);
    }
}

// Shortest round-trip decimal form of a double.
inline std::string format_double(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

} // namespace detail

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "rational";

    static bool is_finite(const Rational&) { return true; }
    static Rational magnitude(const Rational& x) { return x < 0 ? Rational(-x) : x; }
    static Complex to_complex(const Rational& x) { return {x.convert_to<double>(), 0.0}; }
    static std::string to_string(const Rational& x) { return x.str(); }
    static std::string to_decimal(const Rational& x) { return detail::format_double(x.convert_to<double>()); }
};

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "complex";

    static bool is_finite(const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex to_complex(const Complex& x) { return x; }
    static std::string to_decimal(const Complex& x)
    {
        if (x.imag() == 0.0) {
            return detail::format_double(x.real());
        }
        std::string s = detail::format_double(x.real());
        s += x.imag() < 0 ? "-" : "+";
        s += detail::format_double(std::abs(x.imag()));
        s += "i";
        return s;
    }
    static std::string to_string(const Complex& x) { return to_decimal(x); }
};

/// A coefficient field usable inside a TruncatedSeries.
template <class T>
concept SeriesScalar = requires(const T& a, const T& b, int k) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    T(k);
    scalar_traits<T>::exact;
};

template <SeriesScalar T>
T from_int(long long k);

template <>
inline Rational from_int<Rational>(long long k)
{
    return Rational(k);
}

template <>
inline Complex from_int<Complex>(long long k)
{
    return Complex(static_cast<double>(k), 0.0);
}

template <SeriesScalar T>
typename scalar_traits<T>::real_type magnitude(const T& x)
{
    return scalar_traits<T>::magnitude(x);
}

} // namespace coeffsharp
