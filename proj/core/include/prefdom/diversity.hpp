#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "prefdom/abundance.hpp"
#include "prefdom/profile.hpp"

namespace prefdom {

/// Diversity indices over profiles.
///   supp             |support| - 1
///   supp_k           sum over k-subsets of the restriction support size,
///                    minus C(n,k); supports on distinct subsets count
///                    disjointly
///   abundance_k      exact abundance of the support at k
///   entropy_k        minimum over k-subsets of the Shannon entropy (natural
///                    log) of the restricted census distribution
///   abundance_sum_k  sum of restriction sizes over all k-subsets
///   entropy_sum_k    sum of restricted census entropies over all k-subsets
enum class IndexKind { supp, supp_k, abundance_k, entropy_k, abundance_sum_k, entropy_sum_k };

std::string to_string(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view text);

struct IndexValue {
    IndexKind kind = IndexKind::supp;
    std::optional<int> k;
    double value = 0.0;
    std::optional<AlternativeSet> argmin;  // minimizing subset for the min-type kinds
};

/// k is required for every kind except supp and must lie in 1..n.
IndexValue compute_index(const Profile& p, IndexKind kind, std::optional<int> k = std::nullopt);

/// Orders two profiles on the same number of alternatives by index value.
Ordering compare_profiles(const Profile& p1, const Profile& p2, IndexKind kind,
                          std::optional<int> k = std::nullopt);

/// Shannon entropy (natural log) of the census distribution; zero-mass terms
/// contribute 0.
double census_entropy(const Profile& p);

}  // namespace prefdom
