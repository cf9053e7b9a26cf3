#pragma once

#include <cmath>

namespace stickysim {

/// Plain 2D vector (double precision) with the arithmetic used by the
/// simulation kernels. Value type, no allocations.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    constexpr double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    double norm_inf() const { return std::max(std::fabs(x), std::fabs(y)); }

    /// Unit vector in the same direction; {0,0} when the norm is below eps.
    Vec2 normalized(double eps = 1e-300) const {
        const double n = norm();
        if (n <= eps) return {0.0, 0.0};
        return {x / n, y / n};
    }
};

/// Symmetric-enough 2x2 matrix for projections. Row-major.
struct Mat2 {
    double a{0.0}, b{0.0};  // row 0
    double c{0.0}, d{0.0};  // row 1

    constexpr Mat2() = default;
    constexpr Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

    /// Projection onto the orthogonal complement of a unit vector n:
    /// E - n n^T.
    static constexpr Mat2 tangent_projector(const Vec2& n) {
        return {1.0 - n.x * n.x, -n.x * n.y, -n.y * n.x, 1.0 - n.y * n.y};
    }

    constexpr Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    constexpr Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }
    constexpr Mat2 operator-(const Mat2& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }
    constexpr Mat2 transpose() const { return {a, c, b, d}; }

    double max_abs() const {
        return std::max(std::max(std::fabs(a), std::fabs(b)), std::max(std::fabs(c), std::fabs(d)));
    }
};

inline double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace stickysim
