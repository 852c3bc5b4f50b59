#pragma once

// Exact integer solvers for the representation problems behind the triangle
// count: Loeschian admissibility (m^2 - mn + n^2), odd square divisors, the
// ternary equation a^2 + b^2 + c^2 = 3 d^2, and the form s^2 + 3 r^2.

#include <cstdint>
#include <utility>
#include <vector>

namespace ettri {

// Primitive sorted solution of a^2 + b^2 + c^2 = 3 d^2 with all entries odd,
// gcd(a,b,c) = 1 and 0 < a <= b <= c. Identifies the plane a x + b y + c z = 0
// that carries a family of equilateral triangles.
struct PlaneSolution {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
    int64_t d = 0;

    friend auto operator<=>(const PlaneSolution&, const PlaneSolution&) = default;
};

// Solution of s^2 + 3 r^2 = 2 (a^2 + b^2).
struct RsPair {
    int64_t r = 0;
    int64_t s = 0;

    friend auto operator<=>(const RsPair&, const RsPair&) = default;
};

// True iff t = m^2 - mn + n^2 for some integers m, n. Decided by factorization:
// 2 and every prime congruent to 5 (mod 6) must occur to an even exponent.
bool is_loeschian(int64_t t);

// All admissible squared-half-lengths t in [1, n^2], ascending. A triangle of
// side sqrt(2t) fits some plane class iff t is Loeschian, and the largest side
// in {0..n}^3 is n*sqrt(2), so t <= n^2.
std::vector<int64_t> admissible_side_classes(int64_t n);

// All odd d with d^2 | t, ascending.
std::vector<int64_t> odd_square_divisors(int64_t t);

// All pairs {x, y} with x^2 + y^2 = N and 0 <= x <= y, ascending by x.
std::vector<std::pair<int64_t, int64_t>> two_square_reps(int64_t N);

// All primitive sorted (a, b, c) with a^2 + b^2 + c^2 = 3 d^2, lexicographic.
// d must be odd and positive.
std::vector<PlaneSolution> solve_plane_equation(int64_t d);

// All integer (r, s), both signs, with s^2 + 3 r^2 = 2 q, ordered by (r, s).
std::vector<RsPair> solve_rs(int64_t q);

// All integer (m, n) with m^2 - mn + n^2 = z, ordered by (m, n). z >= 1.
std::vector<std::pair<int64_t, int64_t>> loeschian_reps(int64_t z);

// Gauss's criterion: N is a sum of three squares iff N != 4^k (8l + 7).
bool is_sum_of_three_squares(int64_t N);

// Three-parameter generator for a^2 + b^2 + c^2 = 3 d^2:
//   a = -x1^2 + x2^2 + x3^2 - 2 x1 x2 - 2 x1 x3
//   b =  x1^2 - x2^2 + x3^2 - 2 x2 x1 - 2 x2 x3
//   c =  x1^2 + x2^2 - x3^2 - 2 x3 x1 - 2 x3 x2
//   d =  x1^2 + x2^2 + x3^2
// The identity a^2 + b^2 + c^2 = 3 d^2 holds for every nonzero (x1, x2, x3).
struct GeneratedSolution {
    int64_t a, b, c, d;
};
GeneratedSolution plane_solution_from_params(int64_t x1, int64_t x2, int64_t x3);

} // namespace ettri
