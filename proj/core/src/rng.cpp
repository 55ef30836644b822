#include "prefdom/rng.hpp"

namespace prefdom {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    return mix64(master_seed + kGolden * (stream_index + 1));
}

}  // namespace prefdom
