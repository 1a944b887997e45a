#pragma once

// Deterministic grid search with local refinement over the parameter box
//   tau1 in [0,1],  tau2 = r2 e^{i theta2},  tau3 = r3 e^{i theta3}.
//
// Work is split across threads by tau1 index; per-index winners are reduced
// in index order with strict comparison, so the result does not depend on
// the thread count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "caratheodory.hpp"

namespace coeffsharp {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct SearchConfig {
    int grid_tau1 = 101;
    int grid_r = 21;
    int grid_theta = 72;
    int refinement_rounds = 6;
    double shrink_factor = 0.35;
    int refine_points = 7;
    double tolerance_attain = 1e-4;
    double tolerance_exceed = 1e-9;

    void validate() const
    {
        detail::require(grid_tau1 >= 2 && grid_r >= 2 && grid_theta >= 2, "grid counts must be at least 2");
        detail::require(refinement_rounds >= 0, "refinement_rounds must be non-negative");
        detail::require(shrink_factor > 0.0 && shrink_factor < 1.0, "shrink_factor must lie in (0, 1)");
        detail::require(refine_points >= 3, "refine_points must be at least 3");
        detail::require(tolerance_exceed >= 0.0 && tolerance_exceed <= 1e-9 && 1e-9 <= tolerance_attain,
                        "tolerances must satisfy tolerance_exceed <= 1e-9 <= tolerance_attain");
    }

    friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

enum class Sense { maximize, minimize };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool fixed() const { return lo == hi; }
};

/// Box in (tau1, r2, theta2, r3, theta3). A degenerate interval pins the
/// coordinate; an angular interval of width 2 pi is treated as periodic.
struct SearchDomain {
    std::array<Interval, 5> dims{Interval{0.0, 1.0}, Interval{}, Interval{}, Interval{}, Interval{}};

    /// Full domain for a functional depending on tau1 and the first
    /// complex_params of (tau2, tau3).
    static SearchDomain for_params(int complex_params)
    {
        SearchDomain d;
        if (complex_params >= 1) {
            d.dims[1] = {0.0, 1.0};
            d.dims[2] = {0.0, kTwoPi};
        }
        if (complex_params >= 2) {
            d.dims[3] = {0.0, 1.0};
            d.dims[4] = {0.0, kTwoPi};
        }
        return d;
    }

    static bool is_angle(std::size_t k) { return k == 2 || k == 4; }
    bool periodic(std::size_t k) const { return is_angle(k) && dims[k].hi - dims[k].lo >= kTwoPi; }
};

struct SearchResult {
    double value = 0.0;
    std::array<double, 5> coords{};
    CaratheodoryPoint point;
    std::uint64_t evaluations = 0;
};

/// Thread budget: COEFFSHARP_THREADS when set, else the hardware count.
inline unsigned default_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COEFFSHARP_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) {
            n = std::min(n, static_cast<unsigned>(cap));
        }
    }
    return n;
}

namespace detail {

struct PolarNode {
    double r;
    double theta;
    Complex z;
};

inline std::vector<double> axis_points(const SearchDomain& dom, std::size_t k, int n)
{
    const auto& iv = dom.dims[k];
    if (iv.fixed()) {
        return {iv.lo};
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    if (dom.periodic(k)) {
        for (int j = 0; j < n; ++j) {
            out[static_cast<std::size_t>(j)] = iv.lo + kTwoPi * j / n;
        }
    } else {
        for (int j = 0; j < n; ++j) {
            out[static_cast<std::size_t>(j)] = j == n - 1 ? iv.hi : iv.lo + (iv.hi - iv.lo) * j / (n - 1);
        }
    }
    return out;
}

inline double axis_spacing(const SearchDomain& dom, std::size_t k, int n)
{
    const auto& iv = dom.dims[k];
    if (iv.fixed()) {
        return 0.0;
    }
    return dom.periodic(k) ? kTwoPi / n : (iv.hi - iv.lo) / (n - 1);
}

// All r e^{i theta}; the origin appears once.
inline std::vector<PolarNode> polar_nodes(const std::vector<double>& radii, const std::vector<double>& angles)
{
    std::vector<PolarNode> out;
    out.reserve(radii.size() * angles.size());
    for (double r : radii) {
        for (double th : angles) {
            out.push_back({r, th, std::polar(r, th)});
            if (r == 0.0) {
                break;
            }
        }
    }
    return out;
}

struct Best {
    double value;
    std::size_t i1, i2, i3;
    bool valid = false;
};

// Scans tau1 x nodes2 x nodes3; values are already sign-adjusted so larger is better.
template <class Objective>
Best scan(const Objective& f, const std::vector<double>& t1s, const std::vector<PolarNode>& n2,
          const std::vector<PolarNode>& n3, double sign, unsigned threads)
{
    std::vector<Best> per(t1s.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < t1s.size(); i += stride) {
            Best b{0.0, i, 0, 0, false};
            const double t1 = t1s[i];
            for (std::size_t j = 0; j < n2.size(); ++j) {
                for (std::size_t k = 0; k < n3.size(); ++k) {
                    const double v = sign * f(t1, n2[j].z, n3[k].z);
                    if (!b.valid || v > b.value) {
                        b = {v, i, j, k, true};
                    }
                }
            }
            per[i] = b;
        }
    };
    const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(t1s.size())));
    if (nt == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) {
            pool.emplace_back(work, t, nt);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    Best best = per.front();
    for (const auto& b : per) {
        if (b.value > best.value) {
            best = b;
        }
    }
    return best;
}

inline std::vector<double> local_axis(const SearchDomain& dom, std::size_t k, double center, double half, int m)
{
    const auto& iv = dom.dims[k];
    if (iv.fixed()) {
        return {iv.lo};
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        double x = center + half * (2.0 * j / (m - 1) - 1.0);
        if (!dom.periodic(k)) {
            x = std::clamp(x, iv.lo, iv.hi);
        }
        if (out.empty() || out.back() != x) {
            out.push_back(x);
        }
    }
    return out;
}

} // namespace detail

/// Global extremum of f(tau1, tau2, tau3) over dom: full grid scan followed
/// by cfg.refinement_rounds rounds of local grids around the incumbent.
template <class Objective>
SearchResult grid_search(const Objective& f, const SearchDomain& dom, const SearchConfig& cfg, Sense sense,
                         unsigned threads = default_threads())
{
    cfg.validate();
    const double sign = sense == Sense::maximize ? 1.0 : -1.0;
    const std::array<int, 5> counts{cfg.grid_tau1, cfg.grid_r, cfg.grid_theta, cfg.grid_r, cfg.grid_theta};

    std::array<std::vector<double>, 5> axes;
    for (std::size_t k = 0; k < 5; ++k) {
        axes[k] = detail::axis_points(dom, k, counts[k]);
    }
    auto n2 = detail::polar_nodes(axes[1], axes[2]);
    auto n3 = detail::polar_nodes(axes[3], axes[4]);

    SearchResult res;
    auto b = detail::scan(f, axes[0], n2, n3, sign, threads);
    res.evaluations = static_cast<std::uint64_t>(axes[0].size()) * n2.size() * n3.size();
    double best = b.value;
    std::array<double, 5> x{axes[0][b.i1], n2[b.i2].r, n2[b.i2].theta, n3[b.i3].r, n3[b.i3].theta};

    std::array<double, 5> half{};
    for (std::size_t k = 0; k < 5; ++k) {
        half[k] = detail::axis_spacing(dom, k, counts[k]);
    }
    for (int round = 0; round < cfg.refinement_rounds; ++round) {
        std::array<std::vector<double>, 5> loc;
        for (std::size_t k = 0; k < 5; ++k) {
            loc[k] = detail::local_axis(dom, k, x[k], half[k], cfg.refine_points);
        }
        auto m2 = detail::polar_nodes(loc[1], loc[2]);
        auto m3 = detail::polar_nodes(loc[3], loc[4]);
        auto lb = detail::scan(f, loc[0], m2, m3, sign, threads);
        res.evaluations += static_cast<std::uint64_t>(loc[0].size()) * m2.size() * m3.size();
        if (lb.value > best) {
            best = lb.value;
            x = {loc[0][lb.i1], m2[lb.i2].r, m2[lb.i2].theta, m3[lb.i3].r, m3[lb.i3].theta};
        }
        for (auto& h : half) {
            h *= cfg.shrink_factor;
        }
    }

    res.value = sign * best;
    res.coords = x;
    res.point = {x[0], std::polar(x[1], x[2]), std::polar(x[3], x[4])};
    return res;
}

} // namespace coeffsharp
