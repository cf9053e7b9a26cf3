#pragma once

#include <cstddef>
#include <vector>

#include "stickysim/errors.hpp"
#include "stickysim/vec.hpp"

namespace stickysim {

/// Moment function r applied to the state when forming E[r(X_t)].
enum class MomentKind {
    Identity,          // r(x) = x
    SecondCoordinate,  // r(x) = (0, y); feedback laws read the y entry
};

inline Vec2 apply_moment(MomentKind kind, const Vec2& x) {
    switch (kind) {
        case MomentKind::Identity:
            return x;
        case MomentKind::SecondCoordinate:
            return {0.0, x.y};
    }
    return x;
}

/// Time-indexed moment estimates m(t_k) = E[r(X_{t_k})] on the simulation
/// grid t_k = k*dt, k = 0..n_steps.
struct MeanFieldCurve {
    MomentKind moment{MomentKind::Identity};
    double dt{0.0};
    std::vector<Vec2> values;

    MeanFieldCurve() = default;
    MeanFieldCurve(MomentKind kind, double dt_, std::size_t grid_points, Vec2 fill = {})
        : moment(kind), dt(dt_), values(grid_points, fill) {}

    std::size_t grid_points() const { return values.size(); }

    const Vec2& at_step(std::size_t k) const {
        if (k >= values.size())
            throw MissingMeanField("mean-field curve not defined at grid index " +
                                   std::to_string(k));
        return values[k];
    }

    /// Sup-over-grid Euclidean distance between two curves; the proxy for
    /// the path-law metric used by the fixed-point stopping rule.
    static double sup_distance(const MeanFieldCurve& a, const MeanFieldCurve& b) {
        const std::size_t n = std::min(a.values.size(), b.values.size());
        double d = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double dk = (a.values[k] - b.values[k]).norm();
            if (dk > d) d = dk;
        }
        return d;
    }
};

}  // namespace stickysim
