#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "prefdom/alternative_set.hpp"

namespace prefdom::detail {

// Lexicographic k-combinations of {0..n-1}. f receives a pointer to k
// ascending indices and may return false to stop the scan early.
template <class F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::array<int, kMaxAlternatives> idx{};
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (!f(idx.data(), k)) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Lexicographic rank of an ascending triple of indices 0 <= a < b < c < n.
inline std::size_t triple_rank(int n, int a, int b, int c) {
    const auto cnk = [](int m, int k) { return binomial(m, k); };
    return static_cast<std::size_t>(cnk(n, 3) - cnk(n - a, 3) + cnk(n - a - 1, 2) - cnk(n - b, 2) +
                                    static_cast<std::uint64_t>(c - b - 1));
}

// All triples of {0..n-1} in lexicographic order.
inline std::vector<std::array<int, 3>> all_index_triples(int n) {
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<std::size_t>(binomial(n, 3)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

}  // namespace prefdom::detail
