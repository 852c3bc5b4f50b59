#include "analysis.hpp"

#include <cmath>

#include "errors.hpp"
#include "util.hpp"

namespace ettri {

std::vector<IncrementRow> increments_from_classes(const std::vector<ClassContribution>& classes,
                                                  int64_t n_max) {
    if (n_max < 1) fail(errc::invalid_argument, "increments requires n_max >= 1");
    std::vector<IncrementRow> rows(static_cast<size_t>(n_max));
    for (int64_t n = 1; n <= n_max; ++n) rows[n - 1].n = n;
    for (const auto& cls : classes) {
        int64_t t = cls.stats.t;
        if (t < 1 || t > n_max) continue;
        auto alpha = static_cast<int64_t>(cls.stats.alpha);
        auto beta = static_cast<int64_t>(cls.stats.beta);
        auto gamma = static_cast<int64_t>(cls.stats.gamma);
        IncrementRow& row = rows[t - 1];
        row.u += alpha - 3 * beta + 3 * gamma;
        row.v += 3 * alpha - 6 * beta + 3 * gamma;
        row.w += 3 * alpha - 3 * beta;
        row.s += alpha;
    }
    return rows;
}

std::vector<IncrementRow> increments(int64_t n_max, unsigned threads) {
    return increments_from_classes(enumerate_classes(n_max, threads), n_max);
}

uint64_t reconstruct_total(const std::vector<IncrementRow>& rows, int64_t n) {
    __int128 total = 0;
    for (const auto& row : rows) {
        if (row.n > n) continue;
        __int128 k = n - row.n;
        total += row.u * k * k * k + row.v * k * k + row.w * k + row.s;
    }
    if (total < 0) fail(errc::internal, "negative reconstruction total");
    if (total > static_cast<__int128>(UINT64_MAX)) fail(errc::overflow, "reconstruction exceeds 64 bits");
    return static_cast<uint64_t>(total);
}

std::vector<RatioRow> ratios(int64_t n_max, unsigned threads) {
    if (n_max < 1) fail(errc::invalid_argument, "ratios requires n_max >= 1");
    std::vector<RatioRow> rows;
    rows.reserve(static_cast<size_t>(n_max));
    for (int64_t n = 1; n <= n_max; ++n) {
        uint64_t total = et(n, threads).total;
        rows.push_back({n, std::log(static_cast<double>(total)) / std::log(static_cast<double>(n + 1))});
    }
    return rows;
}

std::vector<IncrementRow> check_conjecture_nonnegativity(int64_t n_max, unsigned threads) {
    std::vector<IncrementRow> violations;
    for (const auto& row : increments(n_max, threads))
        if (row.u < 0 || row.v < 0 || row.w < 0 || row.s < 0) violations.push_back(row);
    return violations;
}

} // namespace ettri
