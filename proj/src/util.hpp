#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace ettri {

// Exact integer square root (largest r with r*r <= n), n >= 0.
inline int64_t isqrt(int64_t n) {
    if (n < 0) fail(errc::invalid_argument, "isqrt of negative value");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(int64_t n, int64_t* root = nullptr) {
    if (n < 0) return false;
    int64_t r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

// Overflow-checked arithmetic on unsigned 64-bit counts. Counts must never
// wrap silently; a result out of range is a hard error.
inline uint64_t checked_add_u64(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "64-bit count overflow in addition");
    return r;
}

inline uint64_t checked_mul_u64(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "64-bit count overflow in multiplication");
    return r;
}

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Fork-join map over [0, count): each index is an independent work item.
// `fn` must be pure with respect to shared state except its own output slot.
template <typename Fn>
void parallel_for(size_t count, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    unsigned n_workers = static_cast<unsigned>(std::min<size_t>(threads, count));
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

} // namespace ettri
