// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

namespace mdr::geom {

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    bool operator==(const Vec3&) const = default;
};

// Positions are plain vectors; the alias marks intent in signatures.
using Point3 = Vec3;

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }

// Direction with unit norm (kept within 1e-12 by construction).
struct UnitVec3 {
    double x{1.0}, y{0.0}, z{0.0};

    UnitVec3() = default;

    Vec3 vec() const { return {x, y, z}; }

    static UnitVec3 normalized(const Vec3& v, double eps = 1e-12) {
        const double n = norm(v);
        if (n < eps) throw std::invalid_argument("UnitVec3: zero-length vector");
        UnitVec3 u;
        u.x = v.x / n;
        u.y = v.y / n;
        u.z = v.z / n;
        return u;
    }
};

inline double dot(const UnitVec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double dot(const Vec3& a, const UnitVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace mdr::geom
