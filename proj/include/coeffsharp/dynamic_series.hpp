#pragma once

// Runtime-moded series for callers (the CLI) that only learn the scalar mode
// from their input. Combining two different modes is rejected.

#include <variant>

#include "series.hpp"

namespace coeffsharp {

using AnySeries = std::variant<RationalSeries, ComplexSeries>;

inline const char* mode_of(const AnySeries& s)
{
    return std::holds_alternative<RationalSeries>(s) ? scalar_traits<Rational>::mode_name
                                                      : scalar_traits<Complex>::mode_name;
}

namespace detail {

template <class Op>
AnySeries combine(const AnySeries& a, const AnySeries& b, Op op)
{
    if (a.index() != b.index()) {
        throw mode_mismatch(std::string("cannot combine a ") + mode_of(a) + " series with a " + mode_of(b) + " series");
    }
    return std::visit(
        [&](const auto& x) -> AnySeries {
            using S = std::decay_t<decltype(x)>;
            return op(x, std::get<S>(b));
        },
        a);
}

} // namespace detail

inline AnySeries add(const AnySeries& a, const AnySeries& b)
{
    return detail::combine(a, b, [](const auto& x, const auto& y) { return add(x, y); });
}

inline AnySeries mul(const AnySeries& a, const AnySeries& b)
{
    return detail::combine(a, b, [](const auto& x, const auto& y) { return mul(x, y); });
}

inline AnySeries compose(const AnySeries& outer, const AnySeries& inner)
{
    return detail::combine(outer, inner, [](const auto& x, const auto& y) { return compose(x, y); });
}

inline std::string to_string(const AnySeries& s, bool decimal = false)
{
    return std::visit([&](const auto& x) { return to_string(x, decimal); }, s);
}

} // namespace coeffsharp
