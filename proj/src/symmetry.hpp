#pragma once

// Canonical lattice-triangle representation and the orbit machinery: the 48
// signed-permutation symmetries of a cube, translations within the minimal
// bounding cube C_t, and the (t, alpha, beta, gamma) statistics that feed the
// counting formula.

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace ettri {

using Point = std::array<int64_t, 3>;

// Equilateral triangle with integer vertices, stored vertex-sorted so that
// equality is structural. Canonical triangles additionally have per-axis
// minimum 0 (tight bounding box anchored at the origin).
struct LatticeTriangle {
    std::array<Point, 3> v{};

    friend auto operator<=>(const LatticeTriangle&, const LatticeTriangle&) = default;

    int64_t max_coord() const;
    Point extents() const;  // per-axis max - min
    void sort_vertices();
};

struct TriangleHash {
    size_t operator()(const LatticeTriangle& t) const {
        uint64_t h = 1469598103934665603ull;
        for (const auto& p : t.v)
            for (int64_t c : p) {
                h ^= static_cast<uint64_t>(c);
                h *= 1099511628211ull;
            }
        return static_cast<size_t>(h);
    }
};

using TriangleSet = std::unordered_set<LatticeTriangle, TriangleHash>;

// Orbit statistics of a minimal triangle T inside its bounding cube C_t:
//   t     = max coordinate of T,
//   alpha = |O(T)|,
//   beta  = |O(T) ∩ (O(T)+e3)|,
//   gamma = |(O(T)+e3) ∩ (O(T)+e2)|.
// The choice of shift axes does not matter; O(T) is closed under the 48 maps.
struct OrbitStats {
    int64_t t = 0;
    uint64_t alpha = 0;
    uint64_t beta = 0;
    uint64_t gamma = 0;

    friend auto operator<=>(const OrbitStats&, const OrbitStats&) = default;
};

// Translate so every axis minimum is 0, then sort vertices. Rejects point
// sets that are not a proper equilateral triangle.
LatticeTriangle canonicalize(const std::array<Point, 3>& vertices);

// Images of T under the 48 signed-permutation symmetries of C_t, where t is
// T's bounding size. Vertex-sorted, not re-anchored. Size divides 48.
TriangleSet symmetry_images(const LatticeTriangle& T);

// O(T): all symmetry images of all translates of T that stay inside C_t.
TriangleSet full_orbit(const LatticeTriangle& T);

OrbitStats orbit_stats(const LatticeTriangle& T);

// Stats computed from an already-materialized orbit (avoids recomputation
// when the orbit is needed anyway).
OrbitStats orbit_stats_of(const LatticeTriangle& T, const TriangleSet& orbit);

LatticeTriangle translated(const LatticeTriangle& T, const Point& shift);

} // namespace ettri
