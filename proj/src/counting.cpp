#include "counting.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "errors.hpp"
#include "util.hpp"

namespace ettri {

uint64_t count_for_class(const OrbitStats& stats, int64_t n) {
    if (n < stats.t) fail(errc::invalid_argument, "count_for_class requires n >= stats.t");
    __int128 k1 = n + 1 - stats.t;  // translations per axis including the anchored one
    __int128 k0 = n - stats.t;
    __int128 f = k1 * k1 * k1 * static_cast<__int128>(stats.alpha)
               - 3 * k1 * k1 * k0 * static_cast<__int128>(stats.beta)
               + 3 * k1 * k0 * k0 * static_cast<__int128>(stats.gamma);
    if (f < 0) fail(errc::internal, "negative class contribution");
    if (f > static_cast<__int128>(UINT64_MAX)) fail(errc::overflow, "class contribution exceeds 64 bits");
    return static_cast<uint64_t>(f);
}

std::vector<ClassContribution> enumerate_classes(int64_t n, unsigned threads) {
    if (n < 1) fail(errc::invalid_argument, "enumerate_classes requires n >= 1");

    struct WorkItem {
        int64_t t;
        PlaneSolution plane;
    };
    std::vector<WorkItem> items;
    std::map<int64_t, std::vector<PlaneSolution>> planes_by_d;
    for (int64_t t : admissible_side_classes(n)) {
        for (int64_t d : odd_square_divisors(t)) {
            if (d > n) continue;  // side >= d*sqrt(2) cannot fit when d > n
            auto it = planes_by_d.find(d);
            if (it == planes_by_d.end()) it = planes_by_d.emplace(d, solve_plane_equation(d)).first;
            for (const auto& plane : it->second) items.push_back({t, plane});
        }
    }

    std::vector<std::vector<ClassContribution>> results(items.size());
    parallel_for(items.size(), threads, [&](size_t i) {
        const auto& [t, plane] = items[i];
        for (auto& cls : minimal_classes(t, plane, n)) {
            ClassContribution contrib;
            contrib.t_side = t;
            contrib.plane = plane;
            contrib.representative = cls.representative;
            contrib.stats = orbit_stats_of(cls.representative, cls.orbit);
            contrib.count = count_for_class(contrib.stats, n);
            results[i].push_back(std::move(contrib));
        }
    });

    std::vector<ClassContribution> all;
    for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end(), [](const ClassContribution& lhs, const ClassContribution& rhs) {
        auto key = [](const ClassContribution& c) {
            return std::tuple(c.t_side, c.plane.d, c.plane.a, c.plane.b, c.plane.c, c.representative);
        };
        return key(lhs) < key(rhs);
    });
    return all;
}

CountReport et(int64_t n, unsigned threads) {
    CountReport report;
    report.n = n;
    report.contributions = enumerate_classes(n, threads);
    for (const auto& c : report.contributions) report.total = checked_add_u64(report.total, c.count);
    return report;
}

} // namespace ettri
