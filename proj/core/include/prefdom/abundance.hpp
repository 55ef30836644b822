#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefdom/alternative_set.hpp"
#include "prefdom/domain.hpp"

namespace prefdom {

/// The domain is exactly (k, s)-abundant: every k-subset restriction has at
/// least s distinct suborders and some subset attains exactly s.
struct AbundanceResult {
    int k = 0;
    std::size_t s = 0;
    AlternativeSet argmin;  // lexicographically least minimizing subset
};

/// Minimum restriction size over all k-subsets. Subsets are scanned in
/// lexicographic order; the reported argmin is the first minimizer.
AbundanceResult exact_abundance(const Domain& d, int k);

/// True iff every k-subset restriction has at least s suborders.
/// Short-circuits on the first violating subset.
bool is_abundant(const Domain& d, int k, std::size_t s);

struct AbundanceVector {
    std::vector<std::size_t> entries;        // entries[i] = exact abundance at k = i + 1
    std::vector<AlternativeSet> argmins;     // per-k first minimizing subset
};

/// Exact abundance for every k = 1..n. Capped at n <= 12 unless allow_long.
AbundanceVector abundance_vector(const Domain& d, bool allow_long = false);

enum class Ordering { less, equal, greater };
std::string to_string(Ordering o);

/// Lexicographic comparison of abundance vectors; the greater vector is the
/// more diverse domain. Both domains must have the same number of
/// alternatives.
Ordering compare_abundance(const Domain& d1, const Domain& d2, bool allow_long = false);

/// Sum of restriction sizes over all k-subsets.
std::uint64_t abundance_sum(const Domain& d, int k);

}  // namespace prefdom
