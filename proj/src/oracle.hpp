#pragma once

// Ground-truth engine: brute-force enumeration of every equilateral triangle
// with vertices in {0..n}^3. Deliberately independent of the solver/orbit
// pipeline; only the triangle value type is shared.

#include <cstdint>
#include <vector>

#include "symmetry.hpp"

namespace ettri {

inline constexpr int64_t kDefaultOracleLimit = 12;

// Exact count of unordered equilateral triples in {0..n}^3. Refuses n above
// `limit` to bound runtime.
uint64_t brute_force_et(int64_t n, int64_t limit = kDefaultOracleLimit, unsigned threads = 0);

// The triangles themselves, vertex-sorted, at their positions in {0..n}^3.
std::vector<LatticeTriangle> brute_force_triangles(int64_t n, int64_t limit = kDefaultOracleLimit,
                                                   unsigned threads = 0);

} // namespace ettri
