// extern "C" surface over the C++ core: status codes out, opaque report handle.

#include "ettri.h"

#include <algorithm>
#include <new>

#include "analysis.hpp"
#include "counting.hpp"
#include "diophantine.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "parametrization.hpp"
#include "symmetry.hpp"
#include "util.hpp"

using namespace ettri;

struct ettri_report {
    CountReport report;
};

namespace {

ettri_status to_status(errc code) {
    switch (code) {
        case errc::ok: return ETTRI_OK;
        case errc::invalid_argument: return ETTRI_ERR_INVALID;
        case errc::unsatisfiable: return ETTRI_ERR_UNSATISFIABLE;
        case errc::overflow: return ETTRI_ERR_OVERFLOW;
        case errc::limit_exceeded: return ETTRI_ERR_LIMIT;
        case errc::bad_geometry: return ETTRI_ERR_GEOMETRY;
        case errc::internal: return ETTRI_ERR_INTERNAL;
    }
    return ETTRI_ERR_INTERNAL;
}

template <typename Fn>
ettri_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const EtError& e) {
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        return ETTRI_ERR_INTERNAL;
    } catch (...) {
        return ETTRI_ERR_INTERNAL;
    }
}

// Two-call list protocol: report the size, then copy if a buffer was given.
template <typename Src, typename Copy>
ettri_status fill_list(const Src& src, size_t entry_count, void* out, size_t capacity, size_t* count,
                       Copy&& copy) {
    if (count) *count = entry_count;
    if (!out) return ETTRI_OK;
    if (capacity < entry_count) return ETTRI_ERR_NOSPACE;
    copy(src);
    return ETTRI_OK;
}

} // namespace

extern "C" {

const char* ettri_status_message(ettri_status status) {
    switch (status) {
        case ETTRI_OK: return "ok";
        case ETTRI_ERR_INVALID: return "invalid argument";
        case ETTRI_ERR_UNSATISFIABLE: return "no integral parametrization for plane class";
        case ETTRI_ERR_OVERFLOW: return "count exceeds 64-bit range";
        case ETTRI_ERR_LIMIT: return "size exceeds the brute-force limit";
        case ETTRI_ERR_GEOMETRY: return "degenerate or non-equilateral triangle";
        case ETTRI_ERR_INTERNAL: return "internal invariant breach";
        case ETTRI_ERR_NOSPACE: return "buffer too small";
    }
    return "unknown status";
}

ettri_status ettri_count(uint32_t n, uint32_t threads, uint64_t* total) {
    if (!total) return ETTRI_ERR_INVALID;
    return guarded([&] {
        *total = et(static_cast<int64_t>(n), threads).total;
        return ETTRI_OK;
    });
}

ettri_status ettri_brute_force_count(uint32_t n, uint32_t limit, uint32_t threads, uint64_t* total) {
    if (!total) return ETTRI_ERR_INVALID;
    return guarded([&] {
        int64_t lim = limit == 0 ? kDefaultOracleLimit : static_cast<int64_t>(limit);
        *total = brute_force_et(static_cast<int64_t>(n), lim, threads);
        return ETTRI_OK;
    });
}

ettri_status ettri_side_classes(uint32_t n, uint64_t* out, size_t capacity, size_t* count) {
    return guarded([&] {
        auto sides = admissible_side_classes(static_cast<int64_t>(n));
        return fill_list(sides, sides.size(), out, capacity, count, [&](const auto& src) {
            std::transform(src.begin(), src.end(), out,
                           [](int64_t t) { return static_cast<uint64_t>(t); });
        });
    });
}

ettri_status ettri_odd_square_divisors(uint64_t t, uint64_t* out, size_t capacity, size_t* count) {
    return guarded([&] {
        if (t > static_cast<uint64_t>(INT64_MAX)) fail(errc::invalid_argument, "t out of range");
        auto divisors = odd_square_divisors(static_cast<int64_t>(t));
        return fill_list(divisors, divisors.size(), out, capacity, count, [&](const auto& src) {
            std::transform(src.begin(), src.end(), out,
                           [](int64_t d) { return static_cast<uint64_t>(d); });
        });
    });
}

ettri_status ettri_plane_solutions(uint32_t d, int64_t* out, size_t capacity, size_t* count) {
    return guarded([&] {
        auto planes = solve_plane_equation(static_cast<int64_t>(d));
        return fill_list(planes, planes.size(), out, capacity, count, [&](const auto& src) {
            int64_t* dst = out;
            for (const auto& p : src) {
                *dst++ = p.a;
                *dst++ = p.b;
                *dst++ = p.c;
                *dst++ = p.d;
            }
        });
    });
}

ettri_status ettri_minimal_triangles(uint64_t t, int64_t a, int64_t b, int64_t c, uint32_t bound,
                                     int64_t* out, size_t capacity, size_t* count) {
    return guarded([&] {
        if (t > static_cast<uint64_t>(INT64_MAX)) fail(errc::invalid_argument, "t out of range");
        if (a < 1 || b < a || c < b) fail(errc::invalid_argument, "plane normal must satisfy 0 < a <= b <= c");
        int64_t sum = a * a + b * b + c * c;
        int64_t d;
        if (sum % 3 != 0 || !is_perfect_square(sum / 3, &d) || d % 2 == 0)
            fail(errc::invalid_argument, "normal does not solve a^2+b^2+c^2 = 3 d^2 with odd d");
        PlaneSolution plane{a, b, c, d};
        auto triangles = minimal_triangles(static_cast<int64_t>(t), plane, static_cast<int64_t>(bound));
        return fill_list(triangles, triangles.size(), out, capacity, count, [&](const auto& src) {
            int64_t* dst = out;
            for (const auto& tri : src)
                for (const auto& p : tri.v)
                    for (int64_t coord : p) *dst++ = coord;
        });
    });
}

ettri_status ettri_orbit_stats(const int64_t vertices[9], uint64_t out_stats[4]) {
    if (!vertices || !out_stats) return ETTRI_ERR_INVALID;
    return guarded([&] {
        std::array<Point, 3> pts;
        for (int i = 0; i < 3; ++i) pts[i] = {vertices[3 * i], vertices[3 * i + 1], vertices[3 * i + 2]};
        OrbitStats stats = orbit_stats(canonicalize(pts));
        out_stats[0] = static_cast<uint64_t>(stats.t);
        out_stats[1] = stats.alpha;
        out_stats[2] = stats.beta;
        out_stats[3] = stats.gamma;
        return ETTRI_OK;
    });
}

ettri_status ettri_report_create(uint32_t n, uint32_t threads, ettri_report** out) {
    if (!out) return ETTRI_ERR_INVALID;
    *out = nullptr;
    return guarded([&] {
        auto* report = new ettri_report{et(static_cast<int64_t>(n), threads)};
        *out = report;
        return ETTRI_OK;
    });
}

void ettri_report_free(ettri_report* report) { delete report; }

uint32_t ettri_report_n(const ettri_report* report) {
    return report ? static_cast<uint32_t>(report->report.n) : 0;
}

uint64_t ettri_report_total(const ettri_report* report) {
    return report ? report->report.total : 0;
}

size_t ettri_report_class_count(const ettri_report* report) {
    return report ? report->report.contributions.size() : 0;
}

ettri_status ettri_report_class(const ettri_report* report, size_t index, ettri_class_view* out) {
    if (!report || !out) return ETTRI_ERR_INVALID;
    if (index >= report->report.contributions.size()) return ETTRI_ERR_INVALID;
    const ClassContribution& c = report->report.contributions[index];
    out->t_side = static_cast<uint64_t>(c.t_side);
    out->a = c.plane.a;
    out->b = c.plane.b;
    out->c = c.plane.c;
    out->d = c.plane.d;
    int64_t* dst = out->triangle;
    for (const auto& p : c.representative.v)
        for (int64_t coord : p) *dst++ = coord;
    out->t = static_cast<uint64_t>(c.stats.t);
    out->alpha = c.stats.alpha;
    out->beta = c.stats.beta;
    out->gamma = c.stats.gamma;
    out->count = c.count;
    return ETTRI_OK;
}

ettri_status ettri_increments(uint32_t n_max, uint32_t threads, ettri_increment_row* out,
                              size_t capacity, size_t* count) {
    return guarded([&] {
        auto rows = increments(static_cast<int64_t>(n_max), threads);
        return fill_list(rows, rows.size(), out, capacity, count, [&](const auto& src) {
            ettri_increment_row* dst = out;
            for (const auto& row : src) {
                *dst++ = {static_cast<uint32_t>(row.n), row.u, row.v, row.w, row.s};
            }
        });
    });
}

ettri_status ettri_ratios(uint32_t n_max, uint32_t threads, double* out, size_t capacity,
                          size_t* count) {
    return guarded([&] {
        auto rows = ratios(static_cast<int64_t>(n_max), threads);
        return fill_list(rows, rows.size(), out, capacity, count, [&](const auto& src) {
            std::transform(src.begin(), src.end(), out, [](const RatioRow& r) { return r.a_n; });
        });
    });
}

} // extern "C"
