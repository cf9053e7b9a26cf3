#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "stickysim/errors.hpp"
#include "stickysim/vec.hpp"

namespace stickysim {

/// Pairwise summation over a fixed index order. The result depends only
/// on the data, never on thread count or scheduling.
inline double fixed_order_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return fixed_order_sum(v.subspan(0, half)) + fixed_order_sum(v.subspan(half));
}

struct MeanSe {
    double mean{0.0};
    double se{0.0};
    std::size_t n{0};
};

inline MeanSe mean_se(std::span<const double> v) {
    if (v.empty()) throw EmptyEnsemble("mean_se over an empty sample");
    MeanSe r;
    r.n = v.size();
    r.mean = fixed_order_sum(v) / static_cast<double>(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - r.mean) * (x - r.mean);
        r.se = std::sqrt(ss / (static_cast<double>(v.size() - 1) * static_cast<double>(v.size())));
    }
    return r;
}

/// Inverse effective-sample-size fraction sum(w^2)/(sum w)^2 of a set of
/// importance weights; 1/N for flat weights, 1 for full collapse.
inline double inverse_ess_fraction(std::span<const double> weights) {
    double s = 0.0, s2 = 0.0;
    for (double w : weights) {
        s += w;
        s2 += w * w;
    }
    if (s <= 0.0) return 1.0;
    return s2 / (s * s);
}

/// Sample energy distance (squared) between two planar samples,
/// E^2 = 2 E|X-Y| - E|X-X'| - E|Y-Y'|, as the V-statistic (all pairs,
/// diagonals included). Identical samples give exactly zero.
inline double energy_distance_sq(std::span<const Vec2> xs, std::span<const Vec2> ys) {
    if (xs.empty() || ys.empty()) throw EmptyEnsemble("energy distance over an empty sample");
    const double nx = static_cast<double>(xs.size());
    const double ny = static_cast<double>(ys.size());
    double cross = 0.0;
    for (const Vec2& x : xs)
        for (const Vec2& y : ys) cross += (x - y).norm();
    double intra_x = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) intra_x += 2.0 * (xs[i] - xs[j]).norm();
    double intra_y = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) intra_y += 2.0 * (ys[i] - ys[j]).norm();
    return 2.0 * cross / (nx * ny) - intra_x / (nx * nx) - intra_y / (ny * ny);
}

/// Kolmogorov-Smirnov statistic of a sample against the uniform law on
/// [0, 1]. The input need not be sorted.
inline double ks_statistic_uniform(std::vector<double> sample) {
    if (sample.empty()) throw EmptyEnsemble("KS statistic over an empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = sample[i];
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(f - lo, hi - f));
    }
    return d;
}

/// Asymptotic KS critical value at level alpha (two-sided).
inline double ks_critical_value(std::size_t n, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c / std::sqrt(static_cast<double>(n));
}

}  // namespace stickysim
