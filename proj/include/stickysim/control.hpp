#pragma once

#include <cmath>
#include <optional>

#include "stickysim/geometry.hpp"
#include "stickysim/mean_field.hpp"
#include "stickysim/scheme.hpp"

namespace stickysim {

enum class ControlKind {
    None,         // zero drift, reference dynamics
    LqTrack,      // u = -sigma(x) (x - target)
    MeanFieldLq,  // u = -sigma(x) (x - E[X_t])
    Corridor,     // congestion-scaled drive toward the target
};

/// Congestion penalty h entering the corridor running cost.
enum class CongestionPenalty {
    AbsoluteGap,  // h1 = |y - m2|
    InverseGap,   // h2 = 1 / max(|y - m2|, reg_floor)
};

/// Closed-form feedback law plus its parameters. The congestion variant
/// scales the drive toward `target` by C(x) (c_free + h), with
/// C = c_boundary on the boundary and 1 inside.
struct ControlLaw {
    ControlKind kind{ControlKind::None};
    Vec2 target{};
    double c_free{1.0};
    double c_boundary{1.0};
    CongestionPenalty penalty{CongestionPenalty::AbsoluteGap};
    double reg_floor{1e-3};
    // +1 reproduces the drive-away-from-target sign printed in some
    // derivations; -1 (default) drives toward the target.
    int drive_sign{-1};
    double u_max{50.0};

    bool needs_mean_field() const {
        return kind == ControlKind::MeanFieldLq || kind == ControlKind::Corridor;
    }

    MomentKind moment_kind() const {
        return kind == ControlKind::Corridor ? MomentKind::SecondCoordinate
                                             : MomentKind::Identity;
    }

    void validate() const {
        if (!(u_max > 0.0)) throw ConfigError("control: u_max must be positive");
        if (kind == ControlKind::Corridor) {
            if (!(c_free > 0.0)) throw ConfigError("control: c_free must be positive");
            if (!(c_boundary > 0.0)) throw ConfigError("control: c_boundary must be positive");
            if (penalty == CongestionPenalty::InverseGap && !(reg_floor > 0.0))
                throw ConfigError("control: reg_floor must be positive for the inverse penalty");
            if (drive_sign != 1 && drive_sign != -1)
                throw ConfigError("control: drive_sign must be +1 or -1");
        }
    }

    static ControlLaw none() { return {}; }

    static ControlLaw lq_track(Vec2 target, double u_max = 50.0) {
        ControlLaw c;
        c.kind = ControlKind::LqTrack;
        c.target = target;
        c.u_max = u_max;
        return c;
    }

    static ControlLaw mean_field_lq(double u_max = 50.0) {
        ControlLaw c;
        c.kind = ControlKind::MeanFieldLq;
        c.u_max = u_max;
        return c;
    }

    static ControlLaw corridor(Vec2 target, double c_free, double c_boundary,
                               CongestionPenalty penalty, double reg_floor = 1e-3,
                               int drive_sign = -1, double u_max = 50.0) {
        ControlLaw c;
        c.kind = ControlKind::Corridor;
        c.target = target;
        c.c_free = c_free;
        c.c_boundary = c_boundary;
        c.penalty = penalty;
        c.reg_floor = reg_floor;
        c.drive_sign = drive_sign;
        c.u_max = u_max;
        return c;
    }
};

namespace detail {

/// sigma(x): identity in the interior (restricted to the interval axis),
/// tangential projection on the boundary.
inline Vec2 apply_state_diffusion(const SmoothDomain& domain, const Vec2& x, Phase phase,
                                  const Vec2& v) {
    if (phase == Phase::Attached) return domain.boundary_frame(x).tangent_projection * v;
    return domain.interior_projection() * v;
}

inline double congestion_coefficient(const ControlLaw& law, Phase phase) {
    return phase == Phase::Attached ? law.c_boundary : 1.0;
}

inline double congestion_penalty(const ControlLaw& law, double y, double mean_y) {
    const double gap = std::fabs(y - mean_y);
    if (law.penalty == CongestionPenalty::AbsoluteGap) return gap;
    return 1.0 / std::max(gap, law.reg_floor);
}

/// Clip to the box [-u_max, u_max]^2 by scaling, which preserves the
/// direction (and hence tangency on the boundary).
inline Vec2 clip_to_box(const Vec2& u, double u_max) {
    const double m = u.norm_inf();
    if (m <= u_max) return u;
    return u * (u_max / m);
}

}  // namespace detail

/// Feedback value of the law at (t, x, phase). `mean` carries E[r(X_t)]
/// and is required for the mean-field laws. The result is clipped to the
/// admissible box.
inline Vec2 feedback(const SmoothDomain& domain, const ControlLaw& law, double /*t*/,
                     const Vec2& x, Phase phase, std::optional<Vec2> mean = std::nullopt) {
    switch (law.kind) {
        case ControlKind::None:
            return {0.0, 0.0};
        case ControlKind::LqTrack: {
            const Vec2 u = detail::apply_state_diffusion(domain, x, phase, law.target - x);
            return detail::clip_to_box(u, law.u_max);
        }
        case ControlKind::MeanFieldLq: {
            if (!mean) throw MissingMeanField("mean-field LQ feedback needs E[X_t]");
            const Vec2 u = detail::apply_state_diffusion(domain, x, phase, *mean - x);
            return detail::clip_to_box(u, law.u_max);
        }
        case ControlKind::Corridor: {
            if (!mean) throw MissingMeanField("corridor feedback needs E[X2(t)]");
            const double h = detail::congestion_penalty(law, x.y, mean->y);
            const double scale = detail::congestion_coefficient(law, phase) * (law.c_free + h);
            const Vec2 drive = detail::apply_state_diffusion(domain, x, phase, x - law.target);
            const Vec2 u = drive * (static_cast<double>(law.drive_sign) / scale);
            return detail::clip_to_box(u, law.u_max);
        }
    }
    return {0.0, 0.0};
}

enum class RunningCostForm { Quadratic, Congestion };
enum class TerminalCostForm { None, Target, Variance };

/// Cost functional specification: running form f and terminal form g,
/// both carrying the conventional 1/2 prefactor.
struct CostSpec {
    RunningCostForm running{RunningCostForm::Quadratic};
    TerminalCostForm terminal{TerminalCostForm::None};

    void validate(const ControlLaw& law) const {
        if (running == RunningCostForm::Congestion && law.kind != ControlKind::Corridor)
            throw ConfigError("cost: congestion running cost requires the corridor law");
        if (terminal == TerminalCostForm::Variance && law.kind != ControlKind::MeanFieldLq)
            throw ConfigError("cost: variance terminal cost requires the mean-field LQ law");
    }

    static CostSpec quadratic_target() { return {RunningCostForm::Quadratic, TerminalCostForm::Target}; }
    static CostSpec quadratic_variance() { return {RunningCostForm::Quadratic, TerminalCostForm::Variance}; }
    static CostSpec congestion_target() { return {RunningCostForm::Congestion, TerminalCostForm::Target}; }
};

/// Instantaneous cost f(t, x, m, u) >= 0; zero at u = 0.
inline double running_cost(const ControlLaw& law, const CostSpec& cost, double /*t*/,
                           const Vec2& x, Phase phase, const Vec2& u,
                           std::optional<Vec2> mean = std::nullopt) {
    switch (cost.running) {
        case RunningCostForm::Quadratic:
            return 0.5 * u.norm2();
        case RunningCostForm::Congestion: {
            if (!mean) throw MissingMeanField("congestion running cost needs E[X2(t)]");
            const double h = detail::congestion_penalty(law, x.y, mean->y);
            return 0.5 * detail::congestion_coefficient(law, phase) * (law.c_free + h) * u.norm2();
        }
    }
    return 0.0;
}

/// Terminal cost g(x, m).
inline double terminal_cost(const ControlLaw& law, const CostSpec& cost, const Vec2& x,
                            std::optional<Vec2> mean = std::nullopt) {
    switch (cost.terminal) {
        case TerminalCostForm::None:
            return 0.0;
        case TerminalCostForm::Target:
            return 0.5 * (x - law.target).norm2();
        case TerminalCostForm::Variance: {
            if (!mean) throw MissingMeanField("variance terminal cost needs E[X_T]");
            return 0.5 * (x - *mean).norm2();
        }
    }
    return 0.0;
}

/// Residual of the pointwise stationarity identity
/// q_t grad_u beta - grad_u f = 0 at u = u_hat, with the adjoint
/// diffusion coefficient in its closed form q = -grad_x phi(x) sigma(x)
/// (phi the terminal cost). Exact zero in exact arithmetic for the
/// analytic laws; evaluated on the unclipped feedback.
inline double stationarity_residual(const SmoothDomain& domain, const ControlLaw& law,
                                    const CostSpec& cost, double t, const Vec2& x, Phase phase,
                                    std::optional<Vec2> mean = std::nullopt) {
    if (law.kind == ControlKind::None)
        throw UnsupportedControl("stationarity residual is undefined for the zero control");
    const Vec2 u = feedback(domain, law, t, x, phase, mean);
    Vec2 grad_phi{};
    switch (law.kind) {
        case ControlKind::LqTrack:
        case ControlKind::Corridor:
            grad_phi = x - law.target;
            break;
        case ControlKind::MeanFieldLq: {
            if (!mean) throw MissingMeanField("stationarity residual needs E[X_t]");
            grad_phi = x - *mean;
            break;
        }
        default:
            break;
    }
    // q^T = -sigma(x) grad_phi; grad_u beta = E.
    const Vec2 q = detail::apply_state_diffusion(domain, x, phase, grad_phi) * -1.0;
    Vec2 grad_f{};
    switch (cost.running) {
        case RunningCostForm::Quadratic:
            grad_f = u;
            break;
        case RunningCostForm::Congestion: {
            if (!mean) throw MissingMeanField("stationarity residual needs E[X2(t)]");
            const double h = detail::congestion_penalty(law, x.y, mean->y);
            grad_f = u * (detail::congestion_coefficient(law, phase) * (law.c_free + h));
            break;
        }
    }
    return (q - grad_f).norm();
}

/// First-order adjoint data at one grid point: the closed-form diffusion
/// coefficient q (row vector), a scalar proxy for p (not evolved), and
/// the stationarity residual at that state.
struct AdjointSnapshot {
    Vec2 q{};
    double p{0.0};
    double residual{0.0};
};

inline AdjointSnapshot adjoint_snapshot(const SmoothDomain& domain, const ControlLaw& law,
                                        const CostSpec& cost, double t, const Vec2& x, Phase phase,
                                        std::optional<Vec2> mean = std::nullopt) {
    AdjointSnapshot snap;
    Vec2 grad_phi = x - law.target;
    if (law.kind == ControlKind::MeanFieldLq) {
        if (!mean) throw MissingMeanField("adjoint snapshot needs E[X_t]");
        grad_phi = x - *mean;
    }
    snap.q = detail::apply_state_diffusion(domain, x, phase, grad_phi) * -1.0;
    snap.p = -terminal_cost(law, cost, x, mean);
    snap.residual = stationarity_residual(domain, law, cost, t, x, phase, mean);
    return snap;
}

/// Residual of one backward-Euler step of the second-order adjoint
/// equation dP = -(|b|^2 P + 2 Q.b) dt + Q dB with scalar P and row
/// vector Q. The pair P = 0, Q = 0 solves it exactly with P_T = 0.
inline double second_order_adjoint_step_residual(double p_next, double p_curr, const Vec2& q_curr,
                                                 const Vec2& beta_tilde, const Vec2& dB,
                                                 double dt) {
    const double drift = beta_tilde.norm2() * p_curr + 2.0 * q_curr.dot(beta_tilde);
    return std::fabs(p_next - p_curr + drift * dt - q_curr.dot(dB));
}

}  // namespace stickysim
