#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace segmatch {

/// Deterministic random helpers on top of std::mt19937_64.
///
/// The standard distributions (uniform_int_distribution etc.) are not
/// bit-reproducible across standard library implementations, so everything
/// here derives values from the raw engine output only. Identical seeds give
/// identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 bits of entropy.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double normal();

    /// Unbiased uniform index in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n);

    /// k distinct indices drawn from [0, n) in draw order (partial
    /// Fisher-Yates). k must be <= n.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// FNV-1a 64-bit hash, stable across platforms.
std::uint64_t fnv1a64(std::string_view data);

/// Mixes two 64-bit values into one (splitmix64 finalizer over the sum).
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);

} // namespace segmatch
