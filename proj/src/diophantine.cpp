#include "diophantine.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "util.hpp"

namespace ettri {

bool is_loeschian(int64_t t) {
    if (t < 1) fail(errc::invalid_argument, "is_loeschian requires t >= 1");
    // Strip 2: must divide to an even exponent.
    int exp2 = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++exp2;
    }
    if (exp2 % 2 != 0) return false;
    // 3 may occur to any exponent.
    while (t % 3 == 0) t /= 3;
    for (int64_t p = 5; p * p <= t; p += (p % 6 == 5) ? 2 : 4) {
        if (t % p != 0) continue;
        int e = 0;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (p % 6 == 5 && e % 2 != 0) return false;
    }
    // Leftover prime factor, if any.
    if (t > 1 && t % 6 == 5) return false;
    return true;
}

std::vector<int64_t> admissible_side_classes(int64_t n) {
    if (n < 1) fail(errc::invalid_argument, "admissible_side_classes requires n >= 1");
    std::vector<int64_t> out;
    for (int64_t t = 1; t <= n * n; ++t)
        if (is_loeschian(t)) out.push_back(t);
    return out;
}

std::vector<int64_t> odd_square_divisors(int64_t t) {
    if (t < 1) fail(errc::invalid_argument, "odd_square_divisors requires t >= 1");
    std::vector<int64_t> out;
    for (int64_t d = 1; d * d <= t; d += 2)
        if (t % (d * d) == 0) out.push_back(d);
    return out;
}

std::vector<std::pair<int64_t, int64_t>> two_square_reps(int64_t N) {
    if (N < 0) fail(errc::invalid_argument, "two_square_reps requires N >= 0");
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t x = 0; 2 * x * x <= N; ++x) {
        int64_t y;
        if (is_perfect_square(N - x * x, &y)) out.emplace_back(x, y);
    }
    return out;
}

std::vector<PlaneSolution> solve_plane_equation(int64_t d) {
    if (d < 1 || d % 2 == 0) fail(errc::invalid_argument, "solve_plane_equation requires odd d >= 1");
    std::vector<PlaneSolution> out;
    // Sorted (a,b,c) forces a <= d since 3 a^2 <= a^2+b^2+c^2 = 3 d^2.
    for (int64_t a = 1; a <= d; ++a) {
        for (auto [x, y] : two_square_reps(3 * d * d - a * a)) {
            if (x < a) continue;
            if (std::gcd(std::gcd(a, x), y) != 1) continue;
            out.push_back({a, x, y, d});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RsPair> solve_rs(int64_t q) {
    if (q < 1) fail(errc::invalid_argument, "solve_rs requires q >= 1");
    std::vector<RsPair> out;
    for (int64_t r = -isqrt(2 * q / 3); 3 * r * r <= 2 * q; ++r) {
        int64_t s;
        if (!is_perfect_square(2 * q - 3 * r * r, &s)) continue;
        if (s > 0) out.push_back({r, -s});
        out.push_back({r, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int64_t, int64_t>> loeschian_reps(int64_t z) {
    if (z < 1) fail(errc::invalid_argument, "loeschian_reps requires z >= 1");
    // m^2 - mn + n^2 >= max(m^2, n^2) * 3/4, so |m|, |n| <= 2 sqrt(z/3).
    int64_t bound = isqrt((4 * z) / 3) + 1;
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t m = -bound; m <= bound; ++m)
        for (int64_t n = -bound; n <= bound; ++n)
            if (m * m - m * n + n * n == z) out.emplace_back(m, n);
    return out;
}

bool is_sum_of_three_squares(int64_t N) {
    if (N < 0) fail(errc::invalid_argument, "is_sum_of_three_squares requires N >= 0");
    if (N == 0) return true;
    while (N % 4 == 0) N /= 4;
    return N % 8 != 7;
}

GeneratedSolution plane_solution_from_params(int64_t x1, int64_t x2, int64_t x3) {
    if (x1 == 0 && x2 == 0 && x3 == 0)
        fail(errc::invalid_argument, "plane_solution_from_params requires a nonzero triple");
    int64_t s1 = x1 * x1, s2 = x2 * x2, s3 = x3 * x3;
    GeneratedSolution g{};
    g.a = -s1 + s2 + s3 - 2 * x1 * x2 - 2 * x1 * x3;
    g.b = s1 - s2 + s3 - 2 * x2 * x1 - 2 * x2 * x3;
    g.c = s1 + s2 - s3 - 2 * x3 * x1 - 2 * x3 * x2;
    g.d = s1 + s2 + s3;
    return g;
}

} // namespace ettri
