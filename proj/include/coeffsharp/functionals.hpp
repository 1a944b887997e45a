#pragma once

// Closed-form coefficient functionals of f in the class, expressed through
// the Caratheodory coefficients c1..c4 (or the parameters tau1..tau3).
// Everything is templated on the scalar so the same formulas run exactly over
// rationals and in floating point over complex numbers.

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "caratheodory.hpp"

namespace coeffsharp {

template <class T>
struct TaylorCoeffs {
    T a2{};
    T a3{};
    T a4{};
    std::optional<T> a5;
};

template <class T>
struct LogCoeffs {
    T gamma1{};
    T gamma2{};
    T gamma3{};
};

template <class T>
struct InverseCoeffs {
    T A2{};
    T A3{};
    T A4{};
    std::optional<T> A5;
    T Gamma1{};
    T Gamma2{};
    T Gamma3{};
};

namespace detail {

template <class T>
T q(long long num, long long den)
{
    return from_int<T>(num) / from_int<T>(den);
}

} // namespace detail

/// a2..a4 (and a5 when c4 is known) of f with zf'/f = phi0((p-1)/(p+1)).
template <class T>
TaylorCoeffs<T> taylor_from_c(const SchwarzCoeffsT<T>& c)
{
    using detail::q;
    const T& c1 = c.c1;
    const T& c2 = c.c2;
    const T& c3 = c.c3;
    TaylorCoeffs<T> a;
    a.a2 = c1 * q<T>(1, 2);
    a.a3 = c1 * c1 * q<T>(1, 16) + c2 * q<T>(1, 4);
    a.a4 = -(c1 * c1 * c1) * q<T>(1, 96) + c1 * c2 * q<T>(1, 24) + c3 * q<T>(1, 6);
    if (c.c4) {
        a.a5 = c1 * c1 * c1 * c1 * q<T>(1, 192) - c2 * c1 * c1 * q<T>(5, 192) + c1 * c3 * q<T>(1, 48)
               + *c.c4 * q<T>(1, 8);
    }
    return a;
}

/// Logarithmic coefficients: log(f(z)/z) = 2 sum gamma_n z^n.
template <class T>
LogCoeffs<T> gamma_from_a(const TaylorCoeffs<T>& a)
{
    using detail::q;
    LogCoeffs<T> g;
    g.gamma1 = a.a2 * q<T>(1, 2);
    g.gamma2 = (a.a3 - a.a2 * a.a2 * q<T>(1, 2)) * q<T>(1, 2);
    g.gamma3 = (a.a4 - a.a2 * a.a3 + a.a2 * a.a2 * a.a2 * q<T>(1, 3)) * q<T>(1, 2);
    return g;
}

/// Coefficients A_n of the local inverse and its logarithmic coefficients.
template <class T>
InverseCoeffs<T> inverse_from_a(const TaylorCoeffs<T>& a)
{
    using detail::q;
    const T& a2 = a.a2;
    const T& a3 = a.a3;
    const T& a4 = a.a4;
    const T two = from_int<T>(2);
    InverseCoeffs<T> r;
    r.A2 = -a2;
    r.A3 = -a3 + two * a2 * a2;
    r.A4 = -a4 + from_int<T>(5) * a2 * a3 - from_int<T>(5) * a2 * a2 * a2;
    if (a.a5) {
        r.A5 = -*a.a5 + from_int<T>(6) * a4 * a2 - from_int<T>(21) * a3 * a2 * a2 + from_int<T>(3) * a3 * a3
               + from_int<T>(14) * a2 * a2 * a2 * a2;
    }
    r.Gamma1 = -a2 * q<T>(1, 2);
    r.Gamma2 = -(a3 - a2 * a2 * q<T>(3, 2)) * q<T>(1, 2);
    r.Gamma3 = -(a4 - from_int<T>(4) * a2 * a3 + a2 * a2 * a2 * q<T>(10, 3)) * q<T>(1, 2);
    return r;
}

/// gamma1 gamma3 - gamma2^2 as a polynomial in c1, c2, c3.
template <class T>
T hankel_log(const SchwarzCoeffsT<T>& c)
{
    const T& c1 = c.c1;
    const T& c2 = c.c2;
    const T& c3 = c.c3;
    const T c1sq = c1 * c1;
    return (from_int<T>(-3) * c1sq * c1sq - from_int<T>(8) * c1sq * c2 - from_int<T>(48) * c2 * c2
            + from_int<T>(64) * c1 * c3)
           / from_int<T>(3072);
}

/// Gamma1 Gamma3 - Gamma2^2 as a polynomial in c1, c2, c3.
template <class T>
T hankel_log_inverse(const SchwarzCoeffsT<T>& c)
{
    const T& c1 = c.c1;
    const T& c2 = c.c2;
    const T& c3 = c.c3;
    const T c1sq = c1 * c1;
    return (from_int<T>(33) * c1sq * c1sq - from_int<T>(56) * c1sq * c2 - from_int<T>(48) * c2 * c2
            + from_int<T>(64) * c1 * c3)
           / from_int<T>(3072);
}

/// gamma1 gamma3 - gamma2^2 written directly in the parameters.
inline Complex hankel_log_tau(const CaratheodoryPoint& pt)
{
    pt.validate();
    const double t = pt.tau1;
    const double t2 = t * t;
    const double s = 1.0 - t2;
    const Complex u = pt.tau2;
    return (-3.0 * t2 * t2 + 4.0 * t2 * u * s - 4.0 * u * u * (3.0 + t2) * s
            + 16.0 * t * pt.tau3 * s * (1.0 - std::norm(u)))
           / 192.0;
}

/// Gamma1 Gamma3 - Gamma2^2 written directly in the parameters.
inline Complex hankel_inverse_tau(const CaratheodoryPoint& pt)
{
    pt.validate();
    const double t = pt.tau1;
    const double t2 = t * t;
    const double s = 1.0 - t2;
    const Complex u = pt.tau2;
    return (9.0 * t2 * t2 - 20.0 * t2 * u * s - 4.0 * u * u * (3.0 + t2) * s
            + 16.0 * t * pt.tau3 * s * (1.0 - std::norm(u)))
           / 192.0;
}

/// |gamma2| - |gamma1| = |c2/8 - c1^2/32| - |c1/4|.
template <class T>
typename scalar_traits<T>::real_type moduli_diff_gamma(const SchwarzCoeffsT<T>& c)
{
    using detail::q;
    return magnitude<T>(c.c2 * q<T>(1, 8) - c.c1 * c.c1 * q<T>(1, 32)) - magnitude<T>(c.c1 * q<T>(1, 4));
}

/// |Gamma2| - |Gamma1| = |5 c1^2/32 - c2/8| - |c1/4|.
template <class T>
typename scalar_traits<T>::real_type moduli_diff_Gamma(const SchwarzCoeffsT<T>& c)
{
    using detail::q;
    return magnitude<T>(c.c1 * c.c1 * q<T>(5, 32) - c.c2 * q<T>(1, 8)) - magnitude<T>(c.c1 * q<T>(1, 4));
}

enum class FunctionalId { gamma1, gamma2, gamma3, Gamma1, Gamma2, H21_log, H21_log_inverse, diff_gamma, diff_Gamma };

inline constexpr std::array<FunctionalId, 9> kAllFunctionals = {
    FunctionalId::gamma1, FunctionalId::gamma2,  FunctionalId::gamma3,          FunctionalId::Gamma1,
    FunctionalId::Gamma2, FunctionalId::H21_log, FunctionalId::H21_log_inverse, FunctionalId::diff_gamma,
    FunctionalId::diff_Gamma,
};

inline std::string_view name_of(FunctionalId id)
{
    switch (id) {
    case FunctionalId::gamma1: return "gamma1";
    case FunctionalId::gamma2: return "gamma2";
    case FunctionalId::gamma3: return "gamma3";
    case FunctionalId::Gamma1: return "Gamma1";
    case FunctionalId::Gamma2: return "Gamma2";
    case FunctionalId::H21_log: return "H21_log";
    case FunctionalId::H21_log_inverse: return "H21_log_inverse";
    case FunctionalId::diff_gamma: return "diff_gamma";
    case FunctionalId::diff_Gamma: return "diff_Gamma";
    }
    return "?";
}

/// Accepts the canonical names plus "H21_inverse" as an alias.
inline std::optional<FunctionalId> parse_functional(std::string_view s)
{
    if (s == "H21_inverse") {
        return FunctionalId::H21_log_inverse;
    }
    for (auto id : kAllFunctionals) {
        if (name_of(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

/// Moduli differences are real; every other functional is complex.
inline bool is_real_valued(FunctionalId id)
{
    return id == FunctionalId::diff_gamma || id == FunctionalId::diff_Gamma;
}

/// Value of a functional for a given set of coefficients. Real-valued
/// functionals come back with zero imaginary part.
template <class T>
T evaluate_functional(FunctionalId id, const SchwarzCoeffsT<T>& c)
{
    const auto a = taylor_from_c(c);
    switch (id) {
    case FunctionalId::gamma1: return gamma_from_a(a).gamma1;
    case FunctionalId::gamma2: return gamma_from_a(a).gamma2;
    case FunctionalId::gamma3: return gamma_from_a(a).gamma3;
    case FunctionalId::Gamma1: return inverse_from_a(a).Gamma1;
    case FunctionalId::Gamma2: return inverse_from_a(a).Gamma2;
    case FunctionalId::H21_log: return hankel_log(c);
    case FunctionalId::H21_log_inverse: return hankel_log_inverse(c);
    case FunctionalId::diff_gamma: return T(moduli_diff_gamma(c));
    case FunctionalId::diff_Gamma: return T(moduli_diff_Gamma(c));
    }
    return T{};
}

struct FunctionalValue {
    FunctionalId name{};
    std::variant<Complex, double> value;
    std::variant<CaratheodoryPoint, SchwarzCoeffs> source;

    double magnitude() const
    {
        return std::visit([](const auto& v) -> double { return std::abs(v); }, value);
    }
};

inline FunctionalValue evaluate(FunctionalId id, const SchwarzCoeffs& c)
{
    validate(c);
    const Complex v = evaluate_functional(id, c);
    FunctionalValue out{id, Complex{}, c};
    if (is_real_valued(id)) {
        out.value = v.real();
    } else {
        out.value = v;
    }
    return out;
}

/// Hankel functionals use their parameter form; the rest go through c.
inline FunctionalValue evaluate(FunctionalId id, const CaratheodoryPoint& pt)
{
    FunctionalValue out = evaluate(id, coeffs_from_point(pt));
    if (id == FunctionalId::H21_log) {
        out.value = hankel_log_tau(pt);
    } else if (id == FunctionalId::H21_log_inverse) {
        out.value = hankel_inverse_tau(pt);
    }
    out.source = pt;
    return out;
}

} // namespace coeffsharp
