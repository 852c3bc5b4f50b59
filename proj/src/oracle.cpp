#include "oracle.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "errors.hpp"
#include "util.hpp"

namespace ettri {

namespace {

// Points of {0..n}^3 in index order, plus per-point candidate lists keyed by
// squared distance. For a pair (P, Q) the third vertices are exactly the
// intersection of the two lists at distance |PQ|^2.
struct PointIndex {
    int64_t n;
    int count;                                                  // (n+1)^3
    std::vector<std::unordered_map<int64_t, std::vector<int>>> at_distance;

    explicit PointIndex(int64_t n_) : n(n_) {
        int side = static_cast<int>(n + 1);
        count = side * side * side;
        at_distance.resize(count);
        for (int p = 0; p < count; ++p) {
            auto [px, py, pz] = coords(p);
            for (int q = 0; q < count; ++q) {
                if (q == p) continue;
                auto [qx, qy, qz] = coords(q);
                int64_t dd = (px - qx) * (px - qx) + (py - qy) * (py - qy) + (pz - qz) * (pz - qz);
                at_distance[p][dd].push_back(q);
            }
        }
    }

    std::array<int64_t, 3> coords(int idx) const {
        int side = static_cast<int>(n + 1);
        return {idx / (side * side), (idx / side) % side, idx % side};
    }
};

template <typename Emit>
void scan_triangles(const PointIndex& index, unsigned threads, Emit&& emit) {
    // Outer loop over P; count triples P < Q < R with all pairwise squared
    // distances equal.
    parallel_for(static_cast<size_t>(index.count), threads, [&](size_t pi) {
        int p = static_cast<int>(pi);
        for (const auto& [dd, from_p] : index.at_distance.at(p)) {
            for (int q : from_p) {
                if (q <= p) continue;
                auto it = index.at_distance.at(q).find(dd);
                if (it == index.at_distance.at(q).end()) continue;
                const auto& from_q = it->second;
                // Both candidate lists are ascending; walk the shorter one.
                const auto& probe = from_p.size() <= from_q.size() ? from_p : from_q;
                const auto& other = from_p.size() <= from_q.size() ? from_q : from_p;
                for (int r : probe) {
                    if (r <= q) continue;
                    if (std::binary_search(other.begin(), other.end(), r)) emit(p, q, r);
                }
            }
        }
    });
}

} // namespace

uint64_t brute_force_et(int64_t n, int64_t limit, unsigned threads) {
    if (n < 1) fail(errc::invalid_argument, "brute_force_et requires n >= 1");
    if (n > limit) fail(errc::limit_exceeded, "n exceeds the brute-force limit of " + std::to_string(limit));
    PointIndex index(n);
    std::vector<uint64_t> per_point(index.count, 0);
    scan_triangles(index, threads, [&](int p, int, int) { ++per_point[p]; });
    uint64_t total = 0;
    for (uint64_t c : per_point) total = checked_add_u64(total, c);
    return total;
}

std::vector<LatticeTriangle> brute_force_triangles(int64_t n, int64_t limit, unsigned threads) {
    if (n < 1) fail(errc::invalid_argument, "brute_force_triangles requires n >= 1");
    if (n > limit) fail(errc::limit_exceeded, "n exceeds the brute-force limit of " + std::to_string(limit));
    PointIndex index(n);
    std::vector<LatticeTriangle> out;
    std::mutex out_mutex;
    scan_triangles(index, threads, [&](int p, int q, int r) {
        LatticeTriangle t{{index.coords(p), index.coords(q), index.coords(r)}};
        t.sort_vertices();
        std::lock_guard<std::mutex> lock(out_mutex);
        out.push_back(t);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ettri
