#pragma once

// Integer parametrization of the triangle family in a plane a x + b y + c z = 0:
// twelve coefficients mapping (m, n) to two vertices P, Q (the third vertex is
// the origin), plus the search for minimal triangles of a given side class.

#include <cstdint>
#include <vector>

#include "diophantine.hpp"
#include "symmetry.hpp"

namespace ettri {

struct TriangleBasis {
    PlaneSolution plane;          // the sorted plane class this basis was built for
    std::array<int64_t, 3> normal;// the (possibly permuted) normal actually used
    RsPair rs;
    int64_t q = 0;                // a^2 + b^2 for the permuted normal
    // P = (u, v, w), Q = (x, y, z) with coord = m_coord * m - n_coord * n.
    int64_t mu = 0, nu = 0, mv = 0, nv = 0, mw = 0, nw = 0;
    int64_t mx = 0, nx = 0, my = 0, ny = 0, mz = 0, nz = 0;
};

// Builds the coefficient basis for a plane class: walks solve_rs(q) in order
// and takes the first (r, s) making all twelve coefficients integral. If no
// (r, s) works for the sorted normal, retries each coordinate permutation of
// (a, b, c); permuting the normal permutes triangle coordinates and preserves
// counts. Throws errc::unsatisfiable if every permutation fails.
TriangleBasis find_basis(const PlaneSolution& plane);

// Same, but restricted to one prescribed (r, s) on the sorted normal.
// Throws errc::unsatisfiable when that pair is not integral.
TriangleBasis basis_for_rs(const PlaneSolution& plane, const RsPair& rs);

// Raw triangle {origin, P, Q} for parameters (m, n) != (0, 0). Squared side
// is 2 d^2 (m^2 - mn + n^2).
std::array<Point, 3> triangle_from_basis(const TriangleBasis& basis, int64_t m, int64_t n);

// All minimal triangles of side class t in the given plane that fit in
// {0..bound}^3: one canonical representative per orbit class. Requires
// plane.d^2 | t with Loeschian quotient.
std::vector<LatticeTriangle> minimal_triangles(int64_t t, const PlaneSolution& plane, int64_t bound);

// Internal variant that also returns each representative's full orbit
// (already materialized for deduplication).
struct MinimalClass {
    LatticeTriangle representative;
    TriangleSet orbit;
};
std::vector<MinimalClass> minimal_classes(int64_t t, const PlaneSolution& plane, int64_t bound);

} // namespace ettri
