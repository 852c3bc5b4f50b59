#pragma once

// Top-level pipeline: enumerate triangle classes for a cube size n, compute
// each class's contribution by inclusion-exclusion over translations, and
// aggregate the total ET(n).

#include <cstdint>
#include <vector>

#include "diophantine.hpp"
#include "parametrization.hpp"
#include "symmetry.hpp"

namespace ettri {

struct ClassContribution {
    int64_t t_side = 0;        // squared side = 2 * t_side
    PlaneSolution plane;
    LatticeTriangle representative;
    OrbitStats stats;
    uint64_t count = 0;        // contribution to ET(n)

    friend auto operator<=>(const ClassContribution&, const ClassContribution&) = default;
};

struct CountReport {
    int64_t n = 0;
    uint64_t total = 0;
    std::vector<ClassContribution> contributions;  // ascending (t_side, plane, representative)
};

// Triangles generated by a class with stats (t, alpha, beta, gamma) inside
// {0..n}^3, n >= t:
//   (n+1-t)^3 alpha - 3 (n+1-t)^2 (n-t) beta + 3 (n+1-t) (n-t)^2 gamma
// Checked arithmetic; the result must be nonnegative and fit 64 bits.
uint64_t count_for_class(const OrbitStats& stats, int64_t n);

// Every class contribution for cube size n, deterministically sorted.
std::vector<ClassContribution> enumerate_classes(int64_t n, unsigned threads = 0);

// The full report: total = ET(n).
CountReport et(int64_t n, unsigned threads = 0);

} // namespace ettri
