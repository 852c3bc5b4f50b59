#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "ettri.h"

TEST_CASE("status messages") {
    CHECK(std::string(ettri_status_message(ETTRI_OK)) == "ok");
    CHECK(std::strlen(ettri_status_message(ETTRI_ERR_OVERFLOW)) > 0);
    CHECK(std::strlen(ettri_status_message(ETTRI_ERR_NOSPACE)) > 0);
}

TEST_CASE("count") {
    uint64_t total = 0;
    CHECK(ettri_count(4, 2, &total) == ETTRI_OK);
    CHECK(total == 1264);
    CHECK(ettri_count(4, 2, nullptr) == ETTRI_ERR_INVALID);
    CHECK(ettri_count(0, 2, &total) == ETTRI_ERR_INVALID);
}

TEST_CASE("brute force count and limit") {
    uint64_t total = 0;
    CHECK(ettri_brute_force_count(2, 0, 2, &total) == ETTRI_OK);
    CHECK(total == 80);
    CHECK(ettri_brute_force_count(13, 0, 2, &total) == ETTRI_ERR_LIMIT);
    CHECK(ettri_brute_force_count(13, 13, 1, nullptr) == ETTRI_ERR_INVALID);
}

TEST_CASE("side classes via the two-call protocol") {
    size_t count = 0;
    CHECK(ettri_side_classes(4, nullptr, 0, &count) == ETTRI_OK);
    REQUIRE(count == 8);
    std::vector<uint64_t> values(count);
    CHECK(ettri_side_classes(4, values.data(), values.size(), &count) == ETTRI_OK);
    CHECK(values == std::vector<uint64_t>{1, 3, 4, 7, 9, 12, 13, 16});
    uint64_t too_small[2];
    CHECK(ettri_side_classes(4, too_small, 2, &count) == ETTRI_ERR_NOSPACE);
}

TEST_CASE("odd square divisors") {
    size_t count = 0;
    std::vector<uint64_t> values(4);
    CHECK(ettri_odd_square_divisors(882, values.data(), values.size(), &count) == ETTRI_OK);
    REQUIRE(count == 4);
    CHECK(values == std::vector<uint64_t>{1, 3, 7, 21});
    CHECK(ettri_odd_square_divisors(0, nullptr, 0, &count) == ETTRI_ERR_INVALID);
}

TEST_CASE("plane solutions") {
    size_t count = 0;
    CHECK(ettri_plane_solutions(17, nullptr, 0, &count) == ETTRI_OK);
    REQUIRE(count == 4);
    std::vector<int64_t> flat(count * 4);
    CHECK(ettri_plane_solutions(17, flat.data(), count, &count) == ETTRI_OK);
    CHECK(flat[0] == 1);
    CHECK(flat[1] == 5);
    CHECK(flat[2] == 29);
    CHECK(flat[3] == 17);
    CHECK(ettri_plane_solutions(4, nullptr, 0, &count) == ETTRI_ERR_INVALID);
}

TEST_CASE("minimal triangles") {
    size_t count = 0;
    CHECK(ettri_minimal_triangles(289, 1, 5, 29, 30, nullptr, 0, &count) == ETTRI_OK);
    REQUIRE(count == 1);
    std::vector<int64_t> flat(9);
    CHECK(ettri_minimal_triangles(289, 1, 5, 29, 30, flat.data(), 1, &count) == ETTRI_OK);
    CHECK(flat == std::vector<int64_t>{0, 0, 4, 11, 21, 0, 24, 1, 3});
    // (1,2,2) is sorted but not a plane solution.
    CHECK(ettri_minimal_triangles(9, 1, 2, 2, 4, nullptr, 0, &count) == ETTRI_ERR_INVALID);
    CHECK(ettri_minimal_triangles(9, 5, 1, 1, 4, nullptr, 0, &count) == ETTRI_ERR_INVALID);
}

TEST_CASE("orbit statistics") {
    const int64_t t5[9] = {0, 0, 1, 1, 4, 0, 4, 1, 0};
    uint64_t stats[4];
    CHECK(ettri_orbit_stats(t5, stats) == ETTRI_OK);
    CHECK(stats[0] == 4);
    CHECK(stats[1] == 96);
    CHECK(stats[2] == 24);
    CHECK(stats[3] == 0);
    const int64_t collinear[9] = {0, 0, 0, 1, 1, 1, 2, 2, 2};
    CHECK(ettri_orbit_stats(collinear, stats) == ETTRI_ERR_GEOMETRY);
    CHECK(ettri_orbit_stats(nullptr, stats) == ETTRI_ERR_INVALID);
}

TEST_CASE("orbit statistics are translation invariant") {
    const int64_t t1[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    const int64_t t1_shifted[9] = {4, 2, 7, 3, 3, 7, 3, 2, 8};
    uint64_t a[4], b[4];
    REQUIRE(ettri_orbit_stats(t1, a) == ETTRI_OK);
    REQUIRE(ettri_orbit_stats(t1_shifted, b) == ETTRI_OK);
    for (int i = 0; i < 4; ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("report handle") {
    ettri_report* report = nullptr;
    REQUIRE(ettri_report_create(4, 2, &report) == ETTRI_OK);
    REQUIRE(report != nullptr);
    CHECK(ettri_report_n(report) == 4);
    CHECK(ettri_report_total(report) == 1264);
    size_t classes = ettri_report_class_count(report);
    REQUIRE(classes == 9);
    uint64_t sum = 0;
    for (size_t i = 0; i < classes; ++i) {
        ettri_class_view v;
        REQUIRE(ettri_report_class(report, i, &v) == ETTRI_OK);
        sum += v.count;
        CHECK(v.alpha >= 1);
        CHECK(v.beta <= v.alpha);
        CHECK(v.t <= 4);
        CHECK(2 * v.t_side >= 0);
    }
    CHECK(sum == 1264);
    ettri_class_view v;
    CHECK(ettri_report_class(report, classes, &v) == ETTRI_ERR_INVALID);
    ettri_report_free(report);
    ettri_report_free(nullptr);  // must be a no-op
    CHECK(ettri_report_create(0, 1, &report) == ETTRI_ERR_INVALID);
}

TEST_CASE("increment rows") {
    size_t count = 0;
    CHECK(ettri_increments(4, 2, nullptr, 0, &count) == ETTRI_OK);
    REQUIRE(count == 4);
    std::vector<ettri_increment_row> rows(count);
    CHECK(ettri_increments(4, 2, rows.data(), rows.size(), &count) == ETTRI_OK);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].u == 8);
    CHECK(rows[3].u == 56);
    CHECK(rows[3].v == 240);
    CHECK(rows[3].w == 312);
    CHECK(rows[3].s == 128);
}

TEST_CASE("ratio values") {
    size_t count = 0;
    std::vector<double> values(3);
    CHECK(ettri_ratios(3, 2, values.data(), values.size(), &count) == ETTRI_OK);
    REQUIRE(count == 3);
    CHECK(values[0] == 3.0);
    CHECK(values[1] == doctest::Approx(std::log(80.0) / std::log(3.0)));
}
