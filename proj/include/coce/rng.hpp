#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace coce {

// Deterministic RNG. std::mt19937 has a standard-fixed sequence, but the
// distribution classes do not, so the mappings below are hand-rolled to keep
// outputs identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(static_cast<std::uint32_t>(seed ^ (seed >> 32))) {}

    std::uint32_t next_u32() { return engine_(); }

    // Uniform in [0, 1) with 24 bits of randomness (exact in float).
    float uniform() { return static_cast<float>(next_u32() >> 8) * (1.0f / 16777216.0f); }

    double uniform_double() { return static_cast<double>(next_u32() >> 11) * (1.0 / 2097152.0); }

    float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Modulo bias is irrelevant at our scales
    // (n << 2^32) but rejection sampling keeps it exact anyway.
    std::uint32_t uniform_int(std::uint32_t n) {
        if (n == 0) return 0;
        const std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
        std::uint32_t x;
        do {
            x = next_u32();
        } while (x >= limit);
        return x % n;
    }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(uniform_int(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    // Fisher-Yates; std::shuffle is implementation-defined.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_int(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // First k entries of a random permutation of [0, n): sampling without
    // replacement.
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(uniform_int(static_cast<std::uint32_t>(n - i)));
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        }
        idx.resize(static_cast<std::size_t>(k));
        return idx;
    }

private:
    std::mt19937 engine_;
};

// Splits a base seed into independent stream seeds (sweeps, per-example
// jitter). SplitMix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace coce
