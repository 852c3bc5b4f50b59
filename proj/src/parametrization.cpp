#include "parametrization.hpp"

#include <algorithm>
#include <optional>

#include "errors.hpp"
#include "util.hpp"

namespace ettri {

namespace {

// The twelve coefficients for normal (a, b, c), d, and a candidate (r, s):
//   m_x = -[d b (3r+s) + a c (r-s)] / (2q)     n_x = -(r a c + d b s) / q
//   m_y =  [d a (3r+s) - b c (r-s)] / (2q)     n_y =  (d a s - b c r) / q
//   m_z =  (r-s)/2                             n_z =  r
//   m_u = -(r a c + d b s) / q                 n_u = -[d b (s-3r) + a c (r+s)] / (2q)
//   m_v =  (d a s - r b c) / q                 n_v =  [d a (s-3r) - b c (r+s)] / (2q)
//   m_w =  r                                   n_w =  (r+s)/2
// All divisions must be exact for the basis to be usable.
std::optional<TriangleBasis> try_basis(const PlaneSolution& plane, const std::array<int64_t, 3>& normal,
                                       const RsPair& rs) {
    int64_t a = normal[0], b = normal[1], c = normal[2], d = plane.d;
    int64_t r = rs.r, s = rs.s;
    int64_t q = a * a + b * b;

    auto exact_div = [](int64_t num, int64_t den, int64_t* out) {
        if (num % den != 0) return false;
        *out = num / den;
        return true;
    };

    TriangleBasis basis;
    basis.plane = plane;
    basis.normal = normal;
    basis.rs = rs;
    basis.q = q;
    if (!exact_div(-(d * b * (3 * r + s) + a * c * (r - s)), 2 * q, &basis.mx)) return std::nullopt;
    if (!exact_div(-(r * a * c + d * b * s), q, &basis.nx)) return std::nullopt;
    if (!exact_div(d * a * (3 * r + s) - b * c * (r - s), 2 * q, &basis.my)) return std::nullopt;
    if (!exact_div(d * a * s - b * c * r, q, &basis.ny)) return std::nullopt;
    if (!exact_div(r - s, 2, &basis.mz)) return std::nullopt;
    basis.nz = r;
    if (!exact_div(-(r * a * c + d * b * s), q, &basis.mu)) return std::nullopt;
    if (!exact_div(-(d * b * (s - 3 * r) + a * c * (r + s)), 2 * q, &basis.nu)) return std::nullopt;
    if (!exact_div(d * a * s - r * b * c, q, &basis.mv)) return std::nullopt;
    if (!exact_div(d * a * (s - 3 * r) - b * c * (r + s), 2 * q, &basis.nv)) return std::nullopt;
    basis.mw = r;
    if (!exact_div(r + s, 2, &basis.nw)) return std::nullopt;
    return basis;
}

} // namespace

TriangleBasis basis_for_rs(const PlaneSolution& plane, const RsPair& rs) {
    auto basis = try_basis(plane, {plane.a, plane.b, plane.c}, rs);
    if (!basis) fail(errc::unsatisfiable, "requested (r, s) does not give an integral basis");
    return *basis;
}

TriangleBasis find_basis(const PlaneSolution& plane) {
    if (plane.d < 1 || plane.d % 2 == 0) fail(errc::invalid_argument, "plane solution requires odd d >= 1");
    constexpr int kPerms[6][3] = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    };
    const std::array<int64_t, 3> sorted{plane.a, plane.b, plane.c};
    for (const auto& perm : kPerms) {
        std::array<int64_t, 3> normal{sorted[perm[0]], sorted[perm[1]], sorted[perm[2]]};
        int64_t q = normal[0] * normal[0] + normal[1] * normal[1];
        for (const auto& rs : solve_rs(q)) {
            if (auto basis = try_basis(plane, normal, rs)) return *basis;
        }
    }
    fail(errc::unsatisfiable, "no integral parametrization for plane (" + std::to_string(plane.a) + "," +
                                  std::to_string(plane.b) + "," + std::to_string(plane.c) + "), d=" +
                                  std::to_string(plane.d));
}

std::array<Point, 3> triangle_from_basis(const TriangleBasis& basis, int64_t m, int64_t n) {
    if (m == 0 && n == 0) fail(errc::invalid_argument, "parameters (0, 0) give a degenerate triangle");
    Point p{basis.mu * m - basis.nu * n, basis.mv * m - basis.nv * n, basis.mw * m - basis.nw * n};
    Point q{basis.mx * m - basis.nx * n, basis.my * m - basis.ny * n, basis.mz * m - basis.nz * n};
    return {Point{0, 0, 0}, p, q};
}

std::vector<MinimalClass> minimal_classes(int64_t t, const PlaneSolution& plane, int64_t bound) {
    if (t < 1 || bound < 1) fail(errc::invalid_argument, "minimal_classes requires t >= 1 and bound >= 1");
    int64_t d2 = plane.d * plane.d;
    if (t % d2 != 0) fail(errc::invalid_argument, "plane.d^2 must divide the side class");
    int64_t z = t / d2;
    if (!is_loeschian(z)) fail(errc::invalid_argument, "side class quotient admits no representation");

    TriangleBasis basis = find_basis(plane);
    std::vector<MinimalClass> classes;
    TriangleSet seen;  // union of the orbits of all representatives so far
    for (auto [m, n] : loeschian_reps(z)) {
        LatticeTriangle candidate = canonicalize(triangle_from_basis(basis, m, n));
        if (candidate.max_coord() > bound) continue;
        if (seen.count(candidate)) continue;
        TriangleSet orbit = full_orbit(candidate);
        seen.insert(orbit.begin(), orbit.end());
        classes.push_back({candidate, std::move(orbit)});
    }
    return classes;
}

std::vector<LatticeTriangle> minimal_triangles(int64_t t, const PlaneSolution& plane, int64_t bound) {
    std::vector<LatticeTriangle> out;
    for (auto& cls : minimal_classes(t, plane, bound)) out.push_back(cls.representative);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ettri
