#pragma once

// Growth diagnostics over the class data: the per-size polynomial increment
// rows (u, v, w, s) and the ratio sequence a_n = ln ET(n) / ln(n+1).

#include <cstdint>
#include <vector>

#include "counting.hpp"

namespace ettri {

// Expansion of a class's contribution in powers of k = n' - t:
//   f = (alpha - 3 beta + 3 gamma) k^3 + (3 alpha - 6 beta + 3 gamma) k^2
//     + (3 alpha - 3 beta) k + alpha.
// An IncrementRow sums these coefficients over all classes whose minimal
// bounding size t equals n.
struct IncrementRow {
    int64_t n = 0;
    int64_t u = 0;
    int64_t v = 0;
    int64_t w = 0;
    int64_t s = 0;

    friend auto operator<=>(const IncrementRow&, const IncrementRow&) = default;
};

struct RatioRow {
    int64_t n = 0;
    double a_n = 0.0;  // ln ET(n) / ln(n+1)
};

// Rows for n = 1..n_max. A single class enumeration at n_max discovers every
// class with bounding size <= n_max.
std::vector<IncrementRow> increments(int64_t n_max, unsigned threads = 0);

// Same, from an already-computed class list (must come from an enumeration at
// bound >= n_max).
std::vector<IncrementRow> increments_from_classes(const std::vector<ClassContribution>& classes,
                                                  int64_t n_max);

// Evaluates the reconstruction sum Σ_k [u_k (n-k)^3 + v_k (n-k)^2 + w_k (n-k) + s_k]
// over rows with k <= n; equals ET(n) exactly.
uint64_t reconstruct_total(const std::vector<IncrementRow>& rows, int64_t n);

std::vector<RatioRow> ratios(int64_t n_max, unsigned threads = 0);

// Rows with any negative entry (conjectured empty).
std::vector<IncrementRow> check_conjecture_nonnegativity(int64_t n_max, unsigned threads = 0);

} // namespace ettri
