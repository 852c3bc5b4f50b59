#include "symmetry.hpp"

#include <algorithm>
#include <cassert>

#include "errors.hpp"

namespace ettri {

namespace {

int64_t sq_dist(const Point& p, const Point& q) {
    int64_t s = 0;
    for (int i = 0; i < 3; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
    return s;
}

constexpr int kPerms[6][3] = {
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
};

// Signed permutation of C_t: permute coordinates, then reflect the axes in
// `mask` via x -> t - x.
Point apply_map(const Point& p, int perm, int mask, int64_t t) {
    Point q;
    for (int i = 0; i < 3; ++i) {
        int64_t c = p[kPerms[perm][i]];
        q[i] = (mask >> i & 1) ? t - c : c;
    }
    return q;
}

} // namespace

int64_t LatticeTriangle::max_coord() const {
    int64_t m = v[0][0];
    for (const auto& p : v)
        for (int64_t c : p) m = std::max(m, c);
    return m;
}

Point LatticeTriangle::extents() const {
    Point e;
    for (int i = 0; i < 3; ++i) {
        int64_t lo = std::min({v[0][i], v[1][i], v[2][i]});
        int64_t hi = std::max({v[0][i], v[1][i], v[2][i]});
        e[i] = hi - lo;
    }
    return e;
}

void LatticeTriangle::sort_vertices() { std::sort(v.begin(), v.end()); }

LatticeTriangle canonicalize(const std::array<Point, 3>& vertices) {
    if (vertices[0] == vertices[1] || vertices[0] == vertices[2] || vertices[1] == vertices[2])
        fail(errc::bad_geometry, "degenerate triangle: coincident vertices");
    int64_t d01 = sq_dist(vertices[0], vertices[1]);
    int64_t d02 = sq_dist(vertices[0], vertices[2]);
    int64_t d12 = sq_dist(vertices[1], vertices[2]);
    if (d01 != d02 || d01 != d12) fail(errc::bad_geometry, "not an equilateral triangle");
    LatticeTriangle t{vertices};
    for (int i = 0; i < 3; ++i) {
        int64_t lo = std::min({t.v[0][i], t.v[1][i], t.v[2][i]});
        for (auto& p : t.v) p[i] -= lo;
    }
    t.sort_vertices();
    return t;
}

LatticeTriangle translated(const LatticeTriangle& T, const Point& shift) {
    LatticeTriangle r = T;
    for (auto& p : r.v)
        for (int i = 0; i < 3; ++i) p[i] += shift[i];
    return r;
}

TriangleSet symmetry_images(const LatticeTriangle& T) {
    int64_t t = T.max_coord();
    TriangleSet images;
    for (int perm = 0; perm < 6; ++perm)
        for (int mask = 0; mask < 8; ++mask) {
            LatticeTriangle img;
            for (int k = 0; k < 3; ++k) img.v[k] = apply_map(T.v[k], perm, mask, t);
            img.sort_vertices();
            images.insert(img);
        }
    return images;
}

TriangleSet full_orbit(const LatticeTriangle& T) {
    int64_t t = T.max_coord();
    Point e = T.extents();
    TriangleSet orbit;
    for (int64_t vx = 0; vx + e[0] <= t; ++vx)
        for (int64_t vy = 0; vy + e[1] <= t; ++vy)
            for (int64_t vz = 0; vz + e[2] <= t; ++vz) {
                LatticeTriangle shifted = translated(T, {vx, vy, vz});
                for (int perm = 0; perm < 6; ++perm)
                    for (int mask = 0; mask < 8; ++mask) {
                        LatticeTriangle img;
                        for (int k = 0; k < 3; ++k) img.v[k] = apply_map(shifted.v[k], perm, mask, t);
                        img.sort_vertices();
                        orbit.insert(img);
                    }
            }
    return orbit;
}

namespace {

uint64_t shifted_intersection(const TriangleSet& orbit, const Point& u, const Point& w) {
    // |(orbit + u) ∩ (orbit + w)| = |orbit ∩ (orbit + w - u)|
    Point delta{w[0] - u[0], w[1] - u[1], w[2] - u[2]};
    uint64_t count = 0;
    for (const auto& tri : orbit)
        if (orbit.count(translated(tri, delta))) ++count;
    return count;
}

} // namespace

OrbitStats orbit_stats_of(const LatticeTriangle& T, const TriangleSet& orbit) {
    OrbitStats s;
    s.t = T.max_coord();
    s.alpha = orbit.size();
    s.beta = shifted_intersection(orbit, {0, 0, 0}, {0, 0, 1});
    s.gamma = shifted_intersection(orbit, {0, 0, 1}, {0, 1, 0});
    assert(s.alpha >= 1 && s.beta <= s.alpha && s.gamma <= s.alpha);
#ifndef NDEBUG
    // Axis invariance: the shift axis must not matter.
    assert(s.beta == shifted_intersection(orbit, {0, 0, 0}, {1, 0, 0}));
    assert(s.beta == shifted_intersection(orbit, {0, 0, 0}, {0, 1, 0}));
    assert(s.gamma == shifted_intersection(orbit, {1, 0, 0}, {0, 1, 0}));
#endif
    return s;
}

OrbitStats orbit_stats(const LatticeTriangle& T) { return orbit_stats_of(T, full_orbit(T)); }

} // namespace ettri
