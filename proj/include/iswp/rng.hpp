#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace iswp {

// Fixed-algorithm generator so seeded runs reproduce across platforms and
// standard libraries; workers derive independent streams via mix_seed.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by bitmask rejection (unbiased).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t(0) >> std::countl_zero(bound - 1);
        while (true) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 s(seed ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    return s.next();
}

// Uniform injective k-tuple over {0..n-1} by partial shuffle.
inline std::vector<int> random_tuple(SplitMix64& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

} // namespace iswp
