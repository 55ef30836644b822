#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "prefdom/alternative_set.hpp"
#include "prefdom/linear_order.hpp"

namespace prefdom {

/// A deduplicated set of linear orders over a common alternative set.
/// Orders are stored in lexicographic order. Next to the best-first
/// sequences the domain keeps one dense inverse rank row per order
/// (rank of the i-th alternative of the set), which makes pairwise
/// comparisons O(1) in the triple- and subset-scanning kernels.
class Domain {
public:
    Domain(AlternativeSet alts, std::vector<LinearOrder> orders);

    const AlternativeSet& alts() const { return alts_; }
    int num_alternatives() const { return alts_.size(); }
    std::size_t size() const { return orders_.size(); }
    bool empty() const { return orders_.empty(); }
    const std::vector<LinearOrder>& orders() const { return orders_; }
    const LinearOrder& order(std::size_t i) const { return orders_[i]; }
    bool contains(const LinearOrder& order) const;

    // ranks(i)[j] = position of alts().label(j) within order i, 0 = best.
    const std::uint8_t* ranks(std::size_t i) const { return ranks_[i].data(); }

    // Contains the ascending order of its alternative set.
    bool is_unitary() const;

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.alts_ == b.alts_ && a.orders_ == b.orders_;
    }

private:
    AlternativeSet alts_;
    std::vector<LinearOrder> orders_;
    std::vector<std::array<std::uint8_t, kMaxAlternatives>> ranks_;
};

/// The deduplicated set of suborders induced on a nonempty subset of the
/// alternatives.
Domain restrict_domain(const Domain& d, const AlternativeSet& subset);

/// The distinct orders a triple a < b < c takes across the domain.
struct TriplePatternSet {
    std::array<int, 3> triple{};
    std::vector<LinearOrder> patterns;  // lexicographic, at most 6
};
TriplePatternSet triple_pattern_set(const Domain& d, std::array<int, 3> triple);

/// Pointwise relabeling by a bijection from the domain's alternative set onto
/// an equal-sized target set.
Domain relabel(const Domain& d, const std::map<int, int>& map);

/// The lexicographically least domain among all relabelings onto {1..n}.
/// Two domains are isomorphic iff their canonical forms are equal.
/// Capped at n <= 8.
Domain canonical_form(const Domain& d);

/// Relabels the domain so that it contains the ascending order: the
/// lexicographically least order of d is sent to the ascending order of the
/// alternative set. Returns the relabeled domain and the map used.
std::pair<Domain, std::map<int, int>> make_unitary(const Domain& d);

}  // namespace prefdom
