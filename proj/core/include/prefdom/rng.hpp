#pragma once

#include <cstdint>

namespace prefdom {

/// The splitmix64 output function (finalizer).
std::uint64_t mix64(std::uint64_t x);

/// SplitMix64 (Steele, Lea, Vigna 2014). The sampling lab pins this exact
/// algorithm so that every seeded run is bit-identical across platforms and
/// worker counts.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform draw in [0, n) by 128-bit multiply-shift. Deterministic; the
    /// bias is below 2^-48 for the domain sizes supported here.
    std::uint64_t bounded(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Counter-based per-stream seed: mix64(master_seed + GOLDEN * (index + 1))
/// with GOLDEN = 0x9E3779B97F4A7C15. Streams for distinct indices are
/// distinct and statistically independent.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

}  // namespace prefdom
