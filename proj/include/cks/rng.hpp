#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cks {

// SplitMix64 finalizer. Used for seed expansion and stream derivation.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and a stream index.
// Same (master, index) always yields the same stream, regardless of how many
// other streams exist or which thread consumes it.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master ^ mix64(index + 0x632be59bd9b4e019ULL));
}

// xoshiro256** with splitmix64 seeding. Self-contained so that results do not
// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += 0x9e3779b97f4a7c15ULL;
            std::uint64_t w = z;
            w = (w ^ (w >> 30)) * 0xbf58476d1ce4e5b9ULL;
            w = (w ^ (w >> 27)) * 0x94d049bb133111ebULL;
            word = w ^ (w >> 31);
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return next_double() < p; }

    // Uniform in [0, n). Unbiased via 128-bit multiply with rejection.
    std::uint64_t below(std::uint64_t n) noexcept {
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0ULL - n) % n;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Fisher-Yates. Deterministic for a given seed on every platform.
    template <typename T>
    void shuffle(std::vector<T>& items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace cks
