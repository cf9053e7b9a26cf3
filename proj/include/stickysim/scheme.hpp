#pragma once

#include <cmath>
#include <string>

#include "stickysim/geometry.hpp"
#include "stickysim/rng.hpp"

namespace stickysim {

/// Phase of a path: diffusing in the interior or attached to the boundary.
enum class Phase : unsigned char { Interior = 0, Attached = 1 };

/// State of one path on the time grid.
struct Particle {
    Vec2 x{};
    Phase phase{Phase::Interior};
    double log_likelihood{0.0};
    double boundary_time{0.0};  // diagnostic accumulator
};

/// Numerical parameters of the two-phase scheme.
///
/// The boundary sojourn is realized by an eps-layer rule: a path that
/// leaves the domain attaches to the nearest boundary point; an attached
/// path detaches to depth `layer` with probability dt / (2 gamma layer)
/// per step, so the mean sojourn per attachment is 2 gamma layer.
struct SchemeParams {
    double dt{1e-4};
    double layer{1e-2};    // detachment depth (eps)
    double gamma{0.5};     // boundary stickiness, > 0
    double horizon{1.0};   // T

    double detach_probability() const { return dt / (2.0 * gamma * layer); }
    long n_steps() const { return std::lround(horizon / dt); }
    double grid_time(long k) const { return static_cast<double>(k) * dt; }

    void validate(const SmoothDomain& domain) const {
        if (!(dt > 0.0)) throw ConfigError("scheme: dt must be positive");
        if (!(layer > 0.0)) throw ConfigError("scheme: layer depth must be positive");
        if (!(gamma > 0.0)) throw ConfigError("scheme: gamma must be positive");
        if (!(horizon > 0.0)) throw ConfigError("scheme: horizon must be positive");
        if (detach_probability() > 1.0)
            throw ConfigError("scheme: dt/(2*gamma*layer) = " +
                              std::to_string(detach_probability()) +
                              " is not a probability; refine dt or thicken the layer");
        if (!(layer < domain.max_layer_depth()))
            throw ConfigError("scheme: layer depth must be below " +
                              std::to_string(domain.max_layer_depth()) + " for " +
                              domain.describe());
    }
};

/// Randomness consumed by one step: a Gaussian increment with covariance
/// dt*E and one uniform for the detachment draw. Both are always consumed
/// so that streams stay aligned across runs that share a seed.
struct StepNoise {
    Vec2 dB{};
    double detach_u{1.0};

    static StepNoise draw(ParticleStream& stream, double dt) {
        StepNoise n;
        n.dB = stream.next_normal_pair() * std::sqrt(dt);
        n.detach_u = stream.next_uniform();
        return n;
    }
};

/// Advance one path by one step of the sticky scheme.
///
/// `drift` is the Girsanov kernel value for this step (already clipped by
/// the control law). It enters additively with the Brownian increment, so
/// a drifted run is exactly the zero-drift run evaluated on tilted noise;
/// reweighted reference estimates and direct controlled simulations of
/// the same functional therefore agree in distribution step by step.
///
///  - Interior: Euler proposal; a proposal that leaves the interior is
///    projected onto the boundary and the path attaches there.
///  - Attached: detach to depth `layer` with probability
///    dt/(2 gamma layer); otherwise take a tangential increment and
///    re-project onto the boundary. The metric projection supplies the
///    curvature drift of the boundary diffusion in the weak sense.
inline Particle step(const SmoothDomain& domain, const Particle& p, const Vec2& drift,
                     const SchemeParams& params, const StepNoise& noise) {
    Particle out = p;
    const Vec2 increment = drift * params.dt + noise.dB;
    if (p.phase == Phase::Interior) {
        const Vec2 proposal = p.x + domain.interior_projection() * increment;
        if (domain.signed_distance(proposal) < 0.0) {
            out.x = proposal;
        } else {
            out.x = domain.project_to_boundary(proposal);
            out.phase = Phase::Attached;
        }
    } else {
        if (noise.detach_u < params.detach_probability()) {
            const BoundaryFrame f = domain.boundary_frame(p.x);
            out.x = p.x - f.normal * params.layer;
            out.phase = Phase::Interior;
        } else {
            const BoundaryFrame f = domain.boundary_frame(p.x);
            const Vec2 proposal = p.x + f.tangent_projection * increment;
            out.x = domain.project_to_boundary(proposal);
            out.boundary_time += params.dt;
        }
    }
    return out;
}

}  // namespace stickysim
