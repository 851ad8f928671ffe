#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string_view>

#include "modk/errors.hpp"

namespace modk {

// SplitMix64 finalizer. Used to derive independent seed streams from a
// master seed, so that results never depend on call order or worker count.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
    return splitmix64(master ^ splitmix64(salt + 0x9E3779B97F4A7C15ull));
}

// Tagged stream: hash the purpose tag (FNV-1a) into the salt.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t salt = 0) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return derive_seed(master, h ^ splitmix64(salt));
}

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard;
// all derived quantities below avoid std distributions, whose sequences are
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    bool coin() { return (eng_() & 1ull) != 0; }

    // Uniform in [0, n), unbiased via masked rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            throw input_error("Rng::below: n must be positive");
        if (n == 1)
            return 0;
        const int bits = std::bit_width(n - 1);
        const std::uint64_t mask =
            bits >= 64 ? ~0ull : ((std::uint64_t{1} << bits) - 1);
        for (;;) {
            const std::uint64_t v = eng_() & mask;
            if (v < n)
                return v;
        }
    }

    int int_below(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

private:
    std::mt19937_64 eng_;
};

} // namespace modk
