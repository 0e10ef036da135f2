// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mdrange/vec3.hpp"

namespace mdr {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

namespace geom {

struct Plane {
    Point3 point;      // any point on the plane
    UnitVec3 normal;
};

// Reflection of p across the plane; applying twice returns p.
Point3 mirror_point(const Point3& p, const Plane& surface);

// Finite rectangular reflector: origin + s*edge_u + t*edge_v with s,t in [0,1].
struct Wall {
    std::string name;
    Point3 origin;
    Vec3 edge_u;
    Vec3 edge_v;
    UnitVec3 normal;   // points into the room

    Plane plane() const { return {origin, normal}; }
    bool contains(const Point3& p, double tol = 1e-9) const;
};

// Rectangular-plan room: x in [0,size_x], y in [0,size_y], z in [0,height],
// or an unbounded reflector-free space (LOS only).
class Room {
public:
    static Room box(double size_x, double size_y, double height);
    static Room open();

    const std::vector<Wall>& walls() const { return walls_; }
    double height() const { return height_; }
    double size_x() const { return size_x_; }
    double size_y() const { return size_y_; }
    bool bounded() const { return bounded_; }

    // Strict interior test (margin away from every wall).
    bool contains(const Point3& p, double margin = 0.0) const;

private:
    std::vector<Wall> walls_;
    double size_x_{0.0}, size_y_{0.0}, height_{0.0};
    bool bounded_{false};
};

// Ordered reflecting-surface indices, from the source outwards.
// Empty spec = line of sight.
struct PathSpec {
    std::vector<int> surfaces;

    int bounces() const { return static_cast<int>(surfaces.size()); }
    bool operator==(const PathSpec&) const = default;
    // shorter-first, then lexicographic; gives pooling a stable order
    std::strong_ordering operator<=>(const PathSpec& o) const {
        if (auto c = surfaces.size() <=> o.surfaces.size(); c != 0) return c;
        for (std::size_t i = 0; i < surfaces.size(); ++i)
            if (auto c = surfaces[i] <=> o.surfaces[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

// One specular multipath component between a source and a sink.
struct Mpc {
    PathSpec path;
    Point3 virtual_sink;    // sink mirrored through the path's walls
    double delay_s{0.0};
    UnitVec3 direction;     // departure direction at the source
    double amplitude{1.0};  // linear gain; assigned by channel annotation

    int bounces() const { return path.bounces(); }
};

// All geometrically valid specular paths up to max_bounces, sorted by delay
// (LOS first). Throws std::domain_error if source/sink are outside the room
// or coincide.
std::vector<Mpc> trace_paths(const Point3& source, const Point3& sink,
                             const Room& room, int max_bounces = 3);

// True iff c*|delay difference| <= ||p_b - p_a|| (+slack) for every path
// common to both lists. The lists must cover identical PathSpec sets.
bool delay_difference_bound_check(const Point3& p_a, const Point3& p_b,
                                  const std::vector<Mpc>& mpcs_a,
                                  const std::vector<Mpc>& mpcs_b,
                                  double slack_m = 1e-9);

}  // namespace geom
}  // namespace mdr
