#pragma once

#include <cmath>
#include <string>

#include "stickysim/errors.hpp"
#include "stickysim/vec.hpp"

namespace stickysim {

enum class ShapeKind { Interval, Disk, Corridor };

/// Local boundary data at a point x on the boundary: outward unit normal,
/// projection onto the tangent space (E - n n^T) and mean curvature
/// (tangential divergence of the normal field).
struct BoundaryFrame {
    Vec2 point;
    Vec2 normal;
    Mat2 tangent_projection;
    double curvature{0.0};
};

/// Analytic geometry oracle for the three supported domains:
///
///  - Interval  : the segment [0, L] x {0}, a degenerate 1-D domain with
///                two boundary atoms. Tangent space at the endpoints is
///                empty (projection = 0), curvature 0.
///  - Disk      : center c, radius R. Curvature 1/R everywhere.
///  - Corridor  : rounded rectangle with walls parallel to the x-axis at
///                y = +-half_width and quarter-circle corners of radius
///                corner_radius; curvature 0 on flats, 1/r on corners.
///
/// All queries are exact (closed form per shape); no level-set machinery.
/// Stateless and side-effect free.
class SmoothDomain {
  public:
    static SmoothDomain interval(double length) {
        if (!(length > 0.0)) throw ConfigError("interval length must be positive");
        SmoothDomain d;
        d.kind_ = ShapeKind::Interval;
        d.length_ = length;
        return d;
    }

    static SmoothDomain disk(Vec2 center, double radius) {
        if (!(radius > 0.0)) throw ConfigError("disk radius must be positive");
        SmoothDomain d;
        d.kind_ = ShapeKind::Disk;
        d.center_ = center;
        d.radius_ = radius;
        return d;
    }

    static SmoothDomain corridor(double x_min, double x_max, double half_width,
                                 double corner_radius) {
        if (!(half_width > 0.0)) throw ConfigError("corridor half width must be positive");
        if (!(corner_radius > 0.0 && corner_radius < half_width))
            throw ConfigError("corridor corner radius must satisfy 0 < r < half width");
        if (!(x_max - x_min > 2.0 * half_width))
            throw ConfigError("corridor must be longer than it is wide");
        SmoothDomain d;
        d.kind_ = ShapeKind::Corridor;
        d.cx_ = 0.5 * (x_min + x_max);
        d.hx_ = 0.5 * (x_max - x_min);
        d.hy_ = half_width;
        d.rc_ = corner_radius;
        return d;
    }

    ShapeKind kind() const { return kind_; }
    double interval_length() const { return length_; }
    Vec2 disk_center() const { return center_; }
    double disk_radius() const { return radius_; }
    double corridor_half_width() const { return hy_; }
    double corridor_corner_radius() const { return rc_; }
    double corridor_x_min() const { return cx_ - hx_; }
    double corridor_x_max() const { return cx_ + hx_; }

    /// Signed distance: negative strictly inside, zero on the boundary,
    /// positive outside. The interval is measured along its axis.
    double signed_distance(const Vec2& p) const {
        switch (kind_) {
            case ShapeKind::Interval:
                return std::max(-p.x, p.x - length_);
            case ShapeKind::Disk:
                return (p - center_).norm() - radius_;
            case ShapeKind::Corridor: {
                const double qx = std::fabs(p.x - cx_) - (hx_ - rc_);
                const double qy = std::fabs(p.y) - (hy_ - rc_);
                const double ox = std::max(qx, 0.0);
                const double oy = std::max(qy, 0.0);
                return std::sqrt(ox * ox + oy * oy) + std::min(std::max(qx, qy), 0.0) - rc_;
            }
        }
        return 0.0;
    }

    bool contains(const Vec2& p) const { return signed_distance(p) < 0.0; }

    /// Nearest boundary point. Throws DegenerateProjection when the
    /// nearest point is not unique (query on the medial axis: disk
    /// center, interval midpoint, corridor center line / corner
    /// diagonals). The domains are convex, so exterior queries are
    /// always unique.
    Vec2 project_to_boundary(const Vec2& p) const {
        switch (kind_) {
            case ShapeKind::Interval: {
                if (std::fabs(p.x - 0.5 * length_) < kMedialTol)
                    throw DegenerateProjection("interval midpoint is equidistant to both endpoints");
                return p.x < 0.5 * length_ ? Vec2{0.0, 0.0} : Vec2{length_, 0.0};
            }
            case ShapeKind::Disk: {
                const Vec2 d = p - center_;
                const double n = d.norm();
                if (n < kMedialTol)
                    throw DegenerateProjection("disk center is equidistant to the whole boundary");
                return center_ + d * (radius_ / n);
            }
            case ShapeKind::Corridor: {
                const double a = hx_ - rc_;
                const double b = hy_ - rc_;
                const double sx = p.x >= cx_ ? 1.0 : -1.0;
                const double sy = p.y >= 0.0 ? 1.0 : -1.0;
                const double qx = std::fabs(p.x - cx_) - a;
                const double qy = std::fabs(p.y) - b;
                if (qx > 0.0 && qy > 0.0) {
                    const Vec2 corner{cx_ + sx * a, sy * b};
                    const Vec2 d = p - corner;
                    const double n = d.norm();
                    if (n < kMedialTol)
                        throw DegenerateProjection("corner center is equidistant to the corner arc");
                    return corner + d * (rc_ / n);
                }
                // Inside the inner rectangle two walls can tie (45-degree
                // diagonals through the inner corners).
                if (std::fabs(qx - qy) < kMedialTol)
                    throw DegenerateProjection("corridor corner diagonal has two nearest walls");
                if (qy > qx) {
                    if (std::fabs(p.y) < kMedialTol)
                        throw DegenerateProjection("corridor center line has two nearest walls");
                    return {p.x, sy * hy_};
                }
                return {cx_ + sx * hx_, p.y};
            }
        }
        return p;
    }

    /// Boundary frame at x. Requires |signed_distance(x)| <= 1e-9.
    BoundaryFrame boundary_frame(const Vec2& x) const {
        if (std::fabs(signed_distance(x)) > kBoundaryTol)
            throw NotOnBoundary("boundary_frame: point is off the boundary, |sd| = " +
                                std::to_string(std::fabs(signed_distance(x))));
        BoundaryFrame f;
        f.point = x;
        switch (kind_) {
            case ShapeKind::Interval: {
                f.normal = x.x < 0.5 * length_ ? Vec2{-1.0, 0.0} : Vec2{1.0, 0.0};
                f.tangent_projection = Mat2::zero();
                f.curvature = 0.0;
                break;
            }
            case ShapeKind::Disk: {
                f.normal = (x - center_).normalized();
                f.tangent_projection = Mat2::tangent_projector(f.normal);
                f.curvature = 1.0 / radius_;
                break;
            }
            case ShapeKind::Corridor: {
                const double a = hx_ - rc_;
                const double b = hy_ - rc_;
                const double sx = x.x >= cx_ ? 1.0 : -1.0;
                const double sy = x.y >= 0.0 ? 1.0 : -1.0;
                const double qx = std::fabs(x.x - cx_) - a;
                const double qy = std::fabs(x.y) - b;
                if (qx > 0.0 && qy > 0.0) {
                    const Vec2 corner{cx_ + sx * a, sy * b};
                    f.normal = (x - corner).normalized();
                    f.curvature = 1.0 / rc_;
                } else if (qy > qx) {
                    f.normal = {0.0, sy};
                    f.curvature = 0.0;
                } else {
                    f.normal = {sx, 0.0};
                    f.curvature = 0.0;
                }
                f.tangent_projection = Mat2::tangent_projector(f.normal);
                break;
            }
        }
        return f;
    }

    /// Lebesgue measure of the interior (length / area).
    double interior_measure() const {
        switch (kind_) {
            case ShapeKind::Interval:
                return length_;
            case ShapeKind::Disk:
                return kPi * radius_ * radius_;
            case ShapeKind::Corridor:
                return 4.0 * hx_ * hy_ - (4.0 - kPi) * rc_ * rc_;
        }
        return 0.0;
    }

    /// Surface measure of the boundary (two atoms for the interval,
    /// perimeter otherwise).
    double boundary_measure() const {
        switch (kind_) {
            case ShapeKind::Interval:
                return 2.0;
            case ShapeKind::Disk:
                return 2.0 * kPi * radius_;
            case ShapeKind::Corridor:
                return 4.0 * (hx_ - rc_) + 4.0 * (hy_ - rc_) + 2.0 * kPi * rc_;
        }
        return 0.0;
    }

    /// Projection applied to interior increments. Identity for the planar
    /// shapes; the interval suppresses motion off its axis.
    Mat2 interior_projection() const {
        if (kind_ == ShapeKind::Interval) return {1.0, 0.0, 0.0, 0.0};
        return Mat2::identity();
    }

    /// Arc-length parametrization of the boundary, s in [0, boundary_measure).
    /// For the interval, s < 1 names the left atom and s >= 1 the right one.
    Vec2 boundary_point(double s) const {
        switch (kind_) {
            case ShapeKind::Interval:
                return s < 1.0 ? Vec2{0.0, 0.0} : Vec2{length_, 0.0};
            case ShapeKind::Disk: {
                const double th = s / radius_;
                return center_ + Vec2{radius_ * std::cos(th), radius_ * std::sin(th)};
            }
            case ShapeKind::Corridor: {
                const double a = hx_ - rc_;
                const double b = hy_ - rc_;
                const double arc = 0.5 * kPi * rc_;
                double u = std::fmod(s, boundary_measure());
                if (u < 0.0) u += boundary_measure();
                // bottom wall, left to right
                if (u < 2.0 * a) return {cx_ - a + u, -hy_};
                u -= 2.0 * a;
                if (u < arc) return arc_point({cx_ + a, -b}, -0.5 * kPi + u / rc_);
                u -= arc;
                if (u < 2.0 * b) return {cx_ + hx_, -b + u};
                u -= 2.0 * b;
                if (u < arc) return arc_point({cx_ + a, b}, u / rc_);
                u -= arc;
                // top wall, right to left
                if (u < 2.0 * a) return {cx_ + a - u, hy_};
                u -= 2.0 * a;
                if (u < arc) return arc_point({cx_ - a, b}, 0.5 * kPi + u / rc_);
                u -= arc;
                if (u < 2.0 * b) return {cx_ - hx_, b - u};
                u -= 2.0 * b;
                return arc_point({cx_ - a, -b}, kPi + u / rc_);
            }
        }
        return {};
    }

    Vec2 bounding_box_lo() const {
        switch (kind_) {
            case ShapeKind::Interval:
                return {0.0, 0.0};
            case ShapeKind::Disk:
                return center_ - Vec2{radius_, radius_};
            case ShapeKind::Corridor:
                return {cx_ - hx_, -hy_};
        }
        return {};
    }

    Vec2 bounding_box_hi() const {
        switch (kind_) {
            case ShapeKind::Interval:
                return {length_, 0.0};
            case ShapeKind::Disk:
                return center_ + Vec2{radius_, radius_};
            case ShapeKind::Corridor:
                return {cx_ + hx_, hy_};
        }
        return {};
    }

    /// Largest admissible detachment depth: from any boundary point,
    /// moving inward along -n by less than this stays strictly inside.
    double max_layer_depth() const {
        switch (kind_) {
            case ShapeKind::Interval:
                return 0.5 * length_;
            case ShapeKind::Disk:
                return radius_;
            case ShapeKind::Corridor:
                return rc_;
        }
        return 0.0;
    }

    std::string describe() const {
        switch (kind_) {
            case ShapeKind::Interval:
                return "interval(L=" + std::to_string(length_) + ")";
            case ShapeKind::Disk:
                return "disk(R=" + std::to_string(radius_) + ")";
            case ShapeKind::Corridor:
                return "corridor([" + std::to_string(cx_ - hx_) + "," + std::to_string(cx_ + hx_) +
                       "], w=" + std::to_string(hy_) + ", r=" + std::to_string(rc_) + ")";
        }
        return "?";
    }

    static constexpr double kPi = 3.14159265358979323846;
    static constexpr double kMedialTol = 1e-12;
    static constexpr double kBoundaryTol = 1e-9;

  private:
    SmoothDomain() = default;

    Vec2 arc_point(const Vec2& center, double angle) const {
        return center + Vec2{rc_ * std::cos(angle), rc_ * std::sin(angle)};
    }

    ShapeKind kind_{ShapeKind::Disk};
    // interval
    double length_{0.0};
    // disk
    Vec2 center_{};
    double radius_{0.0};
    // corridor
    double cx_{0.0}, hx_{0.0}, hy_{0.0}, rc_{0.0};
};

}  // namespace stickysim
