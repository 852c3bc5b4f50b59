// ettri: counts equilateral triangles with vertices in {0..n}^3 (OEIS
// A102698) and prints the supporting number theory: admissible side classes,
// plane solutions of a^2+b^2+c^2 = 3d^2, minimal triangles per class, orbit
// statistics, per-size polynomial increments and the growth-exponent ratios.
//
// Talks to the core exclusively through the C API in ettri.h. All results go
// to stdout; progress lines go to stderr. Exit codes: 0 success, 1 verify
// mismatch, 2 invalid input, 3 internal error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ettri.h"

namespace {

enum class Format { plain, csv, json };

struct Options {
    uint32_t threads = 0;
    Format format = Format::plain;
    uint32_t oracle_limit = 12;
};

int exit_code_for(ettri_status status) {
    switch (status) {
        case ETTRI_OK: return 0;
        case ETTRI_ERR_INVALID:
        case ETTRI_ERR_LIMIT:
        case ETTRI_ERR_GEOMETRY: return 2;
        default: return 3;
    }
}

[[noreturn]] void die(ettri_status status) {
    std::fprintf(stderr, "ettri: %s\n", ettri_status_message(status));
    std::exit(exit_code_for(status));
}

void check(ettri_status status) {
    if (status != ETTRI_OK) die(status);
}

// ---- simple value lists ----------------------------------------------------

void print_u64_list(const std::vector<uint64_t>& values, const char* column, Format format) {
    switch (format) {
        case Format::plain:
            for (uint64_t v : values) std::printf("%" PRIu64 "\n", v);
            break;
        case Format::csv:
            std::printf("%s\n", column);
            for (uint64_t v : values) std::printf("%" PRIu64 "\n", v);
            break;
        case Format::json: {
            std::printf("[");
            for (size_t i = 0; i < values.size(); ++i)
                std::printf("%s%" PRIu64, i ? "," : "", values[i]);
            std::printf("]\n");
            break;
        }
    }
}

int run_sides(uint32_t n, const Options& opt) {
    size_t count = 0;
    check(ettri_side_classes(n, nullptr, 0, &count));
    std::vector<uint64_t> values(count);
    check(ettri_side_classes(n, values.data(), values.size(), &count));
    print_u64_list(values, "t", opt.format);
    return 0;
}

int run_divisors(uint64_t t, const Options& opt) {
    size_t count = 0;
    check(ettri_odd_square_divisors(t, nullptr, 0, &count));
    std::vector<uint64_t> values(count);
    check(ettri_odd_square_divisors(t, values.data(), values.size(), &count));
    print_u64_list(values, "d", opt.format);
    return 0;
}

int run_solve3(uint32_t d, const Options& opt) {
    size_t count = 0;
    check(ettri_plane_solutions(d, nullptr, 0, &count));
    std::vector<int64_t> flat(count * 4);
    check(ettri_plane_solutions(d, flat.data(), count, &count));
    switch (opt.format) {
        case Format::plain:
            for (size_t i = 0; i < count; ++i)
                std::printf("%" PRId64 " %" PRId64 " %" PRId64 " %" PRId64 "\n", flat[4 * i],
                            flat[4 * i + 1], flat[4 * i + 2], flat[4 * i + 3]);
            break;
        case Format::csv:
            std::printf("a,b,c,d\n");
            for (size_t i = 0; i < count; ++i)
                std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 "\n", flat[4 * i],
                            flat[4 * i + 1], flat[4 * i + 2], flat[4 * i + 3]);
            break;
        case Format::json:
            std::printf("[");
            for (size_t i = 0; i < count; ++i)
                std::printf("%s{\"a\":%" PRId64 ",\"b\":%" PRId64 ",\"c\":%" PRId64 ",\"d\":%" PRId64 "}",
                            i ? "," : "", flat[4 * i], flat[4 * i + 1], flat[4 * i + 2], flat[4 * i + 3]);
            std::printf("]\n");
            break;
    }
    return 0;
}

void print_triangle_plain(const int64_t* t) {
    std::printf("%" PRId64 " %" PRId64 " %" PRId64 "  %" PRId64 " %" PRId64 " %" PRId64
                "  %" PRId64 " %" PRId64 " %" PRId64 "\n",
                t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7], t[8]);
}

void print_triangle_json(const int64_t* t) {
    std::printf("[[%" PRId64 ",%" PRId64 ",%" PRId64 "],[%" PRId64 ",%" PRId64 ",%" PRId64
                "],[%" PRId64 ",%" PRId64 ",%" PRId64 "]]",
                t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7], t[8]);
}

int run_minimal(uint64_t t, int64_t a, int64_t b, int64_t c, uint32_t bound, const Options& opt) {
    size_t count = 0;
    check(ettri_minimal_triangles(t, a, b, c, bound, nullptr, 0, &count));
    std::vector<int64_t> flat(count * 9);
    check(ettri_minimal_triangles(t, a, b, c, bound, flat.data(), count, &count));
    switch (opt.format) {
        case Format::plain:
            for (size_t i = 0; i < count; ++i) print_triangle_plain(&flat[9 * i]);
            break;
        case Format::csv:
            std::printf("x1,y1,z1,x2,y2,z2,x3,y3,z3\n");
            for (size_t i = 0; i < count; ++i) {
                const int64_t* v = &flat[9 * i];
                std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64
                            ",%" PRId64 ",%" PRId64 ",%" PRId64 "\n",
                            v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]);
            }
            break;
        case Format::json:
            std::printf("[");
            for (size_t i = 0; i < count; ++i) {
                if (i) std::printf(",");
                print_triangle_json(&flat[9 * i]);
            }
            std::printf("]\n");
            break;
    }
    return 0;
}

int run_orbit(const std::vector<int64_t>& coords, const Options& opt) {
    uint64_t stats[4];
    check(ettri_orbit_stats(coords.data(), stats));
    switch (opt.format) {
        case Format::plain:
            std::printf("t=%" PRIu64 " alpha=%" PRIu64 " beta=%" PRIu64 " gamma=%" PRIu64 "\n",
                        stats[0], stats[1], stats[2], stats[3]);
            break;
        case Format::csv:
            std::printf("t,alpha,beta,gamma\n%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n",
                        stats[0], stats[1], stats[2], stats[3]);
            break;
        case Format::json:
            std::printf("{\"t\":%" PRIu64 ",\"alpha\":%" PRIu64 ",\"beta\":%" PRIu64
                        ",\"gamma\":%" PRIu64 "}\n",
                        stats[0], stats[1], stats[2], stats[3]);
            break;
    }
    return 0;
}

// ---- counting --------------------------------------------------------------

int run_count(uint32_t n, const Options& opt) {
    uint64_t total = 0;
    check(ettri_count(n, opt.threads, &total));
    std::printf("%" PRIu64 "\n", total);
    return 0;
}

int run_breakdown(uint32_t n, const Options& opt) {
    ettri_report* report = nullptr;
    check(ettri_report_create(n, opt.threads, &report));
    size_t classes = ettri_report_class_count(report);
    uint64_t total = ettri_report_total(report);
    switch (opt.format) {
        case Format::plain:
            for (size_t i = 0; i < classes; ++i) {
                ettri_class_view v;
                check(ettri_report_class(report, i, &v));
                std::printf("t=%" PRIu64 " d=%" PRId64 " plane=(%" PRId64 ",%" PRId64 ",%" PRId64
                            ") tri=[(%" PRId64 ",%" PRId64 ",%" PRId64 "),(%" PRId64 ",%" PRId64
                            ",%" PRId64 "),(%" PRId64 ",%" PRId64 ",%" PRId64 ")] alpha=%" PRIu64
                            " beta=%" PRIu64 " gamma=%" PRIu64 " count=%" PRIu64 "\n",
                            v.t_side, v.d, v.a, v.b, v.c, v.triangle[0], v.triangle[1], v.triangle[2],
                            v.triangle[3], v.triangle[4], v.triangle[5], v.triangle[6], v.triangle[7],
                            v.triangle[8], v.alpha, v.beta, v.gamma, v.count);
            }
            std::printf("total %" PRIu64 "\n", total);
            break;
        case Format::csv:
            std::printf("t,d,a,b,c,x1,y1,z1,x2,y2,z2,x3,y3,z3,alpha,beta,gamma,count\n");
            for (size_t i = 0; i < classes; ++i) {
                ettri_class_view v;
                check(ettri_report_class(report, i, &v));
                std::printf("%" PRIu64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64, v.t_side, v.d,
                            v.a, v.b, v.c);
                for (int k = 0; k < 9; ++k) std::printf(",%" PRId64, v.triangle[k]);
                std::printf(",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n", v.alpha, v.beta,
                            v.gamma, v.count);
            }
            break;
        case Format::json: {
            std::printf("{\"n\":%u,\"total\":%" PRIu64 ",\"contributions\":[", n, total);
            for (size_t i = 0; i < classes; ++i) {
                ettri_class_view v;
                check(ettri_report_class(report, i, &v));
                if (i) std::printf(",");
                std::printf("{\"t\":%" PRIu64 ",\"d\":%" PRId64 ",\"a\":%" PRId64 ",\"b\":%" PRId64
                            ",\"c\":%" PRId64 ",\"triangle\":",
                            v.t_side, v.d, v.a, v.b, v.c);
                print_triangle_json(v.triangle);
                std::printf(",\"alpha\":%" PRIu64 ",\"beta\":%" PRIu64 ",\"gamma\":%" PRIu64
                            ",\"count\":%" PRIu64 "}",
                            v.alpha, v.beta, v.gamma, v.count);
            }
            std::printf("]}\n");
            break;
        }
    }
    ettri_report_free(report);
    return 0;
}

int run_table(uint32_t from, uint32_t to, const Options& opt) {
    std::vector<uint64_t> totals;
    totals.reserve(to - from + 1);
    for (uint32_t n = from; n <= to; ++n) {
        uint64_t total = 0;
        check(ettri_count(n, opt.threads, &total));
        totals.push_back(total);
        std::fprintf(stderr, "et(%u) = %" PRIu64 "\n", n, total);
    }
    switch (opt.format) {
        case Format::plain:
            for (size_t i = 0; i < totals.size(); ++i)
                std::printf("%u %" PRIu64 "\n", from + static_cast<uint32_t>(i), totals[i]);
            break;
        case Format::csv:
            std::printf("n,et\n");
            for (size_t i = 0; i < totals.size(); ++i)
                std::printf("%u,%" PRIu64 "\n", from + static_cast<uint32_t>(i), totals[i]);
            break;
        case Format::json:
            std::printf("[");
            for (size_t i = 0; i < totals.size(); ++i)
                std::printf("%s{\"n\":%u,\"et\":%" PRIu64 "}", i ? "," : "",
                            from + static_cast<uint32_t>(i), totals[i]);
            std::printf("]\n");
            break;
    }
    return 0;
}

int run_oracle(uint32_t n, const Options& opt) {
    uint64_t total = 0;
    check(ettri_brute_force_count(n, opt.oracle_limit, opt.threads, &total));
    std::printf("%" PRIu64 "\n", total);
    return 0;
}

int run_verify(uint32_t to, const Options& opt) {
    bool all_ok = true;
    for (uint32_t n = 1; n <= to; ++n) {
        uint64_t pipeline = 0, oracle = 0;
        check(ettri_count(n, opt.threads, &pipeline));
        check(ettri_brute_force_count(n, opt.oracle_limit, opt.threads, &oracle));
        bool ok = pipeline == oracle;
        all_ok = all_ok && ok;
        std::printf("n=%u et=%" PRIu64 " oracle=%" PRIu64 " %s\n", n, pipeline, oracle,
                    ok ? "OK" : "MISMATCH");
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}

// ---- analysis --------------------------------------------------------------

int run_increments(uint32_t to, const Options& opt) {
    size_t count = 0;
    check(ettri_increments(to, opt.threads, nullptr, 0, &count));
    std::vector<ettri_increment_row> rows(count);
    check(ettri_increments(to, opt.threads, rows.data(), rows.size(), &count));
    switch (opt.format) {
        case Format::plain:
            for (const auto& r : rows)
                std::printf("n=%u u=%" PRId64 " v=%" PRId64 " w=%" PRId64 " s=%" PRId64 "\n", r.n, r.u,
                            r.v, r.w, r.s);
            break;
        case Format::csv:
            std::printf("n,u,v,w,s\n");
            for (const auto& r : rows)
                std::printf("%u,%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 "\n", r.n, r.u, r.v, r.w,
                            r.s);
            break;
        case Format::json:
            std::printf("[");
            for (size_t i = 0; i < rows.size(); ++i)
                std::printf("%s{\"n\":%u,\"u\":%" PRId64 ",\"v\":%" PRId64 ",\"w\":%" PRId64
                            ",\"s\":%" PRId64 "}",
                            i ? "," : "", rows[i].n, rows[i].u, rows[i].v, rows[i].w, rows[i].s);
            std::printf("]\n");
            break;
    }
    return 0;
}

int run_ratios(uint32_t to, const Options& opt) {
    size_t count = 0;
    check(ettri_ratios(to, opt.threads, nullptr, 0, &count));
    std::vector<double> values(count);
    check(ettri_ratios(to, opt.threads, values.data(), values.size(), &count));
    switch (opt.format) {
        case Format::plain:
            for (size_t i = 0; i < values.size(); ++i)
                std::printf("n=%zu a=%.12g\n", i + 1, values[i]);
            break;
        case Format::csv:
            std::printf("n,a\n");
            for (size_t i = 0; i < values.size(); ++i) std::printf("%zu,%.12g\n", i + 1, values[i]);
            break;
        case Format::json:
            std::printf("[");
            for (size_t i = 0; i < values.size(); ++i)
                std::printf("%s{\"n\":%zu,\"a\":%.12g}", i ? "," : "", i + 1, values[i]);
            std::printf("]\n");
            break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilateral triangles with vertices in the integer cube {0..n}^3 (OEIS A102698)"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand name

    Options opt;
    app.add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)")
        ->envname("LATTICE_EQTRI_THREADS");

    std::map<std::string, Format> format_names{
        {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    };

    uint32_t n = 1, from = 1, to = 1, bound = 1, d_arg = 1;
    uint64_t t_arg = 1;
    int64_t pa = 1, pb = 1, pc = 1;
    std::vector<int64_t> coords;

    auto* count_cmd = app.add_subcommand("count", "ET(n): total equilateral triangles in {0..n}^3");
    count_cmd->add_option("n", n, "Cube size")->required()->check(CLI::PositiveNumber);

    auto* breakdown_cmd =
        app.add_subcommand("breakdown", "Per-class contributions (side class, plane, orbit stats)");
    breakdown_cmd->add_option("n", n, "Cube size")->required()->check(CLI::PositiveNumber);
    add_format(breakdown_cmd);

    auto* table_cmd = app.add_subcommand("table", "ET(n) for a range of cube sizes");
    table_cmd->add_option("--from", from, "First n")->check(CLI::PositiveNumber);
    table_cmd->add_option("--to", to, "Last n")->required()->check(CLI::PositiveNumber);
    add_format(table_cmd);

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Brute-force count over all point triples (independent of the pipeline)");
    oracle_cmd->add_option("n", n, "Cube size")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--limit", opt.oracle_limit, "Largest n the oracle accepts");

    auto* verify_cmd =
        app.add_subcommand("verify", "Compare pipeline and brute-force counts for n = 1..K");
    verify_cmd->add_option("--to", to, "Last n to verify")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--limit", opt.oracle_limit, "Largest n the oracle accepts");

    auto* sides_cmd = app.add_subcommand(
        "sides", "Admissible side classes t <= n^2 (squared side = 2t, t Loeschian)");
    sides_cmd->add_option("n", n, "Cube size")->required()->check(CLI::PositiveNumber);
    add_format(sides_cmd);

    auto* solve3_cmd =
        app.add_subcommand("solve3", "Primitive sorted solutions of a^2+b^2+c^2 = 3d^2 for odd d");
    solve3_cmd->add_option("d", d_arg, "Odd d >= 1")->required()->check(CLI::PositiveNumber);
    add_format(solve3_cmd);

    auto* divisors_cmd = app.add_subcommand("divisors", "Odd d with d^2 dividing the side class t");
    divisors_cmd->add_option("t", t_arg, "Side class")->required()->check(CLI::PositiveNumber);
    add_format(divisors_cmd);

    auto* minimal_cmd = app.add_subcommand(
        "minimal", "Minimal triangles of side class t in plane (a,b,c) fitting {0..bound}^3");
    minimal_cmd->add_option("t", t_arg, "Side class (squared side = 2t)")
        ->required()
        ->check(CLI::PositiveNumber);
    minimal_cmd->add_option("a", pa, "Plane normal a")->required();
    minimal_cmd->add_option("b", pb, "Plane normal b")->required();
    minimal_cmd->add_option("c", pc, "Plane normal c")->required();
    minimal_cmd->add_option("bound", bound, "Cube size bound")->required()->check(CLI::PositiveNumber);
    add_format(minimal_cmd);

    auto* orbit_cmd = app.add_subcommand(
        "orbit", "Orbit statistics (t, alpha, beta, gamma) of a triangle given as nine integers");
    orbit_cmd->add_option("coords", coords, "x1 y1 z1 x2 y2 z2 x3 y3 z3")->expected(9);
    add_format(orbit_cmd);

    auto* increments_cmd = app.add_subcommand(
        "increments", "Per-size polynomial increment rows (u, v, w, s) of the counting recurrence");
    increments_cmd->add_option("--to", to, "Last size")->required()->check(CLI::PositiveNumber);
    add_format(increments_cmd);

    auto* ratios_cmd = app.add_subcommand("ratios", "Growth exponents a_n = ln ET(n) / ln(n+1)");
    ratios_cmd->add_option("--to", to, "Last n")->required()->check(CLI::PositiveNumber);
    add_format(ratios_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (count_cmd->parsed()) return run_count(n, opt);
    if (breakdown_cmd->parsed()) return run_breakdown(n, opt);
    if (table_cmd->parsed()) {
        if (from > to) {
            std::fprintf(stderr, "ettri: --from must not exceed --to\n");
            return 2;
        }
        return run_table(from, to, opt);
    }
    if (oracle_cmd->parsed()) return run_oracle(n, opt);
    if (verify_cmd->parsed()) return run_verify(to, opt);
    if (sides_cmd->parsed()) return run_sides(n, opt);
    if (solve3_cmd->parsed()) return run_solve3(d_arg, opt);
    if (divisors_cmd->parsed()) return run_divisors(t_arg, opt);
    if (minimal_cmd->parsed()) return run_minimal(t_arg, pa, pb, pc, bound, opt);
    if (orbit_cmd->parsed()) return run_orbit(coords, opt);
    if (increments_cmd->parsed()) return run_increments(to, opt);
    if (ratios_cmd->parsed()) return run_ratios(to, opt);
    return 2;
}
