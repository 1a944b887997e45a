#pragma once

#include <random>
#include <vector>

#include <coeffsharp.hpp>

namespace coeffsharp::testing {

inline Rational q(long long p, long long d = 1)
{
    return Rational(p, d);
}

inline RationalSeries rseries(std::vector<Rational> v)
{
    return RationalSeries(std::move(v));
}

/// Fixed-seed generator shared by the property suites.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline double uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Uniform point in the closed unit disk scaled by radius.
inline Complex disk(double radius = 1.0)
{
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, kTwoPi));
}

inline CaratheodoryPoint random_point()
{
    return {uniform(0.0, 1.0), disk(), disk()};
}

inline SchwarzCoeffs random_c()
{
    return coeffs_from_point(random_point());
}

} // namespace coeffsharp::testing
