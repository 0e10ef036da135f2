// SPDX-License-Identifier: Apache-2.0
#include "mdrange/geom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mdr::geom {

Point3 mirror_point(const Point3& p, const Plane& surface) {
    const double h = dot(p - surface.point, surface.normal);
    return p - surface.normal.vec() * (2.0 * h);
}

bool Wall::contains(const Point3& p, double tol) const {
    const Vec3 w = p - origin;
    if (std::abs(dot(w, normal)) > tol) return false;
    const double lu2 = norm2(edge_u);
    const double lv2 = norm2(edge_v);
    const double s = dot(w, edge_u) / lu2;
    const double t = dot(w, edge_v) / lv2;
    const double su = tol / std::sqrt(lu2);
    const double sv = tol / std::sqrt(lv2);
    return s >= -su && s <= 1.0 + su && t >= -sv && t <= 1.0 + sv;
}

Room Room::box(double size_x, double size_y, double height) {
    if (size_x <= 0.0 || size_y <= 0.0 || height <= 0.0)
        throw std::invalid_argument("Room::box: dimensions must be positive");
    Room r;
    r.size_x_ = size_x;
    r.size_y_ = size_y;
    r.height_ = height;
    r.bounded_ = true;

    const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
    auto unit = [](double x, double y, double z) {
        return UnitVec3::normalized({x, y, z});
    };
    r.walls_ = {
        {"wall_x0", {0, 0, 0}, ey * size_y, ez * height, unit(1, 0, 0)},
        {"wall_x1", {size_x, 0, 0}, ey * size_y, ez * height, unit(-1, 0, 0)},
        {"wall_y0", {0, 0, 0}, ex * size_x, ez * height, unit(0, 1, 0)},
        {"wall_y1", {0, size_y, 0}, ex * size_x, ez * height, unit(0, -1, 0)},
        {"floor", {0, 0, 0}, ex * size_x, ey * size_y, unit(0, 0, 1)},
        {"ceiling", {0, 0, height}, ex * size_x, ey * size_y, unit(0, 0, -1)},
    };
    return r;
}

Room Room::open() { return Room{}; }

bool Room::contains(const Point3& p, double margin) const {
    if (!bounded_) return true;
    return p.x > margin && p.x < size_x_ - margin &&
           p.y > margin && p.y < size_y_ - margin &&
           p.z > margin && p.z < height_ - margin;
}

namespace {

// Backtrace one wall sequence via the image method. Returns true and fills
// the Mpc if every reflection point lands inside its wall rectangle.
bool realize_path(const Point3& source, const Point3& sink,
                  const std::vector<Wall>& walls, const std::vector<int>& seq,
                  Mpc& out) {
    const int m = static_cast<int>(seq.size());

    // images of the sink through walls seq[j..m-1]
    std::vector<Point3> image(m);
    Point3 img = sink;
    for (int j = m - 1; j >= 0; --j) {
        img = mirror_point(img, walls[seq[j]].plane());
        image[j] = img;
    }
    const Point3 virtual_sink = (m > 0) ? image[0] : sink;

    const double path_len = distance(source, virtual_sink);
    if (path_len < 1e-9) return false;

    Point3 prev = source;
    for (int j = 0; j < m; ++j) {
        const Wall& w = walls[seq[j]];
        const Vec3 dir = image[j] - prev;
        const double denom = dot(dir, w.normal);
        // must approach the wall from the interior side
        if (denom >= -1e-15) return false;
        const double t = dot(w.origin - prev, w.normal.vec()) / denom;
        if (t <= 1e-12 || t >= 1.0 - 1e-12) return false;
        const Point3 hit = prev + dir * t;
        if (!w.contains(hit, 1e-9)) return false;
        prev = hit;
    }

    out.path = PathSpec{seq};
    out.virtual_sink = virtual_sink;
    out.delay_s = path_len / kSpeedOfLight;
    out.direction = UnitVec3::normalized(virtual_sink - source);
    out.amplitude = 1.0;
    return true;
}

void enumerate(const Point3& source, const Point3& sink,
               const std::vector<Wall>& walls, int max_bounces,
               std::vector<int>& seq, std::vector<Mpc>& out) {
    if (static_cast<int>(seq.size()) >= max_bounces) return;
    for (int w = 0; w < static_cast<int>(walls.size()); ++w) {
        if (!seq.empty() && seq.back() == w) continue;
        seq.push_back(w);
        Mpc mpc;
        if (realize_path(source, sink, walls, seq, mpc)) out.push_back(std::move(mpc));
        enumerate(source, sink, walls, max_bounces, seq, out);
        seq.pop_back();
    }
}

}  // namespace

std::vector<Mpc> trace_paths(const Point3& source, const Point3& sink,
                             const Room& room, int max_bounces) {
    if (max_bounces < 0) throw std::invalid_argument("trace_paths: max_bounces < 0");
    if (!room.contains(source) || !room.contains(sink))
        throw std::domain_error("trace_paths: source/sink outside room");
    if (distance(source, sink) < 1e-9)
        throw std::domain_error("trace_paths: source and sink coincide");

    std::vector<Mpc> paths;
    Mpc los;
    if (realize_path(source, sink, room.walls(), {}, los)) paths.push_back(std::move(los));

    std::vector<int> seq;
    enumerate(source, sink, room.walls(), max_bounces, seq, paths);

    std::sort(paths.begin(), paths.end(), [](const Mpc& a, const Mpc& b) {
        if (a.delay_s != b.delay_s) return a.delay_s < b.delay_s;
        return a.path < b.path;
    });
    return paths;
}

bool delay_difference_bound_check(const Point3& p_a, const Point3& p_b,
                                  const std::vector<Mpc>& mpcs_a,
                                  const std::vector<Mpc>& mpcs_b,
                                  double slack_m) {
    std::map<PathSpec, double> delays_a;
    for (const Mpc& m : mpcs_a) delays_a.emplace(m.path, m.delay_s);
    if (delays_a.size() != mpcs_a.size() || mpcs_a.size() != mpcs_b.size())
        throw std::domain_error("delay_difference_bound_check: unmatched path sets");

    const double d = distance(p_a, p_b);
    for (const Mpc& m : mpcs_b) {
        auto it = delays_a.find(m.path);
        if (it == delays_a.end())
            throw std::domain_error("delay_difference_bound_check: unmatched path sets");
        if (kSpeedOfLight * std::abs(m.delay_s - it->second) > d + slack_m) return false;
    }
    return true;
}

}  // namespace mdr::geom
