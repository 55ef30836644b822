#pragma once

#include <optional>

#include "prefdom/domain.hpp"

namespace prefdom {

/// Backtracking search for a smallest Condorcet domain on {1..n} of size at
/// most max_size that is (k, s)-abundant. Candidate orders are enumerated in
/// lexicographic order starting from the ascending order (every nonempty
/// isomorphism class has a unitary representative), with two prunes per
/// placement: a triple whose nine pattern cells would all be covered kills
/// the Condorcet property, and a k-subset with c distinct suborders and m
/// orders still to be chosen is infeasible once c + m < s. The result is
/// minimal: no proper subset is (k, s)-abundant. Returns nothing when the
/// search space is exhausted. n <= 8, n = 9 behind allow_long.
std::optional<Domain> search_min_abundant(int n, int k, std::size_t s, int max_size,
                                          bool allow_long = false);

}  // namespace prefdom
