#pragma once

#include "prefdom/alternative_set.hpp"
#include "prefdom/domain.hpp"
#include "prefdom/never_law.hpp"

namespace prefdom {

/// The maximal set of orders of {1..n} satisfying every condition of the law
/// on every triple. Orders are built best-first with early rejection at the
/// first violated triple slot. n <= 10, n = 11 behind allow_long.
Domain generate_from_never_law(const NeverLaw& law, bool allow_long = false);

// Law constructors for the built-in families.
NeverLaw black_law(int n);                                    // 2N3 on all triples
NeverLaw fishburn_alternating_law(int n);                     // 2N1 for odd middle, 2N3 for even
NeverLaw set_alternating_law(int n, const AlternativeSet& a); // 1N3 when middle in a, else 3N1

/// Black's single-peaked domain on the ascending axis: the maximal domain
/// under the all-2N3 law; size 2^(n-1). 2 <= n <= 10.
Domain black_single_peaked(int n);

/// Fishburn's alternating domain. 3 <= n <= 10, n = 11 behind allow_long.
Domain fishburn_alternating(int n, bool allow_long = false);

/// Set-alternating domain for a subset A of {1..n}; size at least 2^(n-1).
Domain set_alternating(int n, const AlternativeSet& a);

/// Caterpillar group-separable domain: alternative i goes either entirely
/// before or entirely after the recursively built block on {i+1..n};
/// 2^(n-1) orders.
Domain caterpillar_group_separable(int n);

/// The bubble-sort path from 12..n to n..21, always swapping the leftmost
/// adjacent pair that is still in ascending order. Every unordered pair flips
/// exactly once, giving C(n,2)+1 orders, single-crossing in path order.
Domain single_crossing_path(int n);

/// S-construction: all concatenations uv and vu for u in d1, v in d2, over
/// disjoint alternative sets; size exactly 2|d1||d2|.
Domain s_construction(const Domain& d1, const Domain& d2);

/// All n! orders of {1..n} (impartial culture support). n <= 8, n = 9 behind
/// allow_long.
Domain unrestricted_domain(int n, bool allow_long = false);

}  // namespace prefdom
