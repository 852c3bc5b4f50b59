#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "analysis.hpp"
#include "test_support.hpp"

using namespace ettri;
using namespace ettri::testing;

TEST_CASE("increment rows for n = 1..10") {
    auto rows = increments(10, 2);
    REQUIRE(rows.size() == 10);
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].n == static_cast<int64_t>(i + 1));
        CHECK(rows[i].u == kIncrementRows[i].u);
        CHECK(rows[i].v == kIncrementRows[i].v);
        CHECK(rows[i].w == kIncrementRows[i].w);
        CHECK(rows[i].s == kIncrementRows[i].s);
    }
}

TEST_CASE("reconstruction reproduces the totals") {
    auto rows = increments(12, 2);
    for (int64_t n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(reconstruct_total(rows, n) == et(n, 2).total);
    }
}

TEST_CASE("row coefficients expand the class formula") {
    // For every class, evaluating the four expansion coefficients at
    // k = n - t must reproduce count_for_class.
    for (const auto& cls : enumerate_classes(6, 2)) {
        auto alpha = static_cast<int64_t>(cls.stats.alpha);
        auto beta = static_cast<int64_t>(cls.stats.beta);
        auto gamma = static_cast<int64_t>(cls.stats.gamma);
        for (int64_t n = cls.stats.t; n <= 10; ++n) {
            int64_t k = n - cls.stats.t;
            int64_t expanded = (alpha - 3 * beta + 3 * gamma) * k * k * k +
                               (3 * alpha - 6 * beta + 3 * gamma) * k * k +
                               (3 * alpha - 3 * beta) * k + alpha;
            CAPTURE(n);
            CHECK(static_cast<uint64_t>(expanded) == count_for_class(cls.stats, n));
        }
    }
}

TEST_CASE("new-class totals count triangles first seen at each size") {
    auto rows = increments(5, 2);
    // s_n = ET(n) - (all classes of smaller bounding size evaluated at n).
    for (int64_t n = 2; n <= 5; ++n) {
        uint64_t carried = 0;
        for (const auto& cls : enumerate_classes(n - 1, 2))
            carried += count_for_class(cls.stats, n);
        CAPTURE(n);
        CHECK(static_cast<uint64_t>(rows[n - 1].s) == et(n, 2).total - carried);
    }
}

TEST_CASE("ratios start at exactly 3 and keep increasing") {
    auto rows = ratios(8, 2);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].a_n == 3.0);  // ln 8 / ln 2
    for (size_t i = 1; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].a_n > rows[i - 1].a_n);
        CHECK(rows[i].a_n < 5.0);
        CHECK(rows[i].a_n > 0.0);
    }
}

TEST_CASE("no negative increments in the computed range") {
    CHECK(check_conjecture_nonnegativity(10, 2).empty());
    CHECK(check_conjecture_nonnegativity(1, 1).empty());
}
