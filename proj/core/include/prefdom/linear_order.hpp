#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "prefdom/alternative_set.hpp"

namespace prefdom {

/// A strict total order over an alternative set, best alternative first.
class LinearOrder {
public:
    explicit LinearOrder(std::vector<int> ranking);

    int size() const { return static_cast<int>(ranking_.size()); }
    // 0-based position, 0 = best.
    int at(int position) const { return ranking_[static_cast<std::size_t>(position)]; }
    const std::vector<int>& ranking() const { return ranking_; }

    // Position of a label, -1 when the label does not occur.
    int position_of(int label) const;
    bool prefers(int a, int b) const;
    bool is_permutation_of(const AlternativeSet& alts) const;

    std::string to_string() const;  // labels separated by single spaces

    friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

private:
    std::vector<int> ranking_;
};

/// Parses an order from whitespace- or comma-separated labels; a bare digit
/// string is accepted when every label of `alts` is a single digit.
/// Throws parse_error naming the offending token.
LinearOrder parse_order(std::string_view text, const AlternativeSet& alts);

}  // namespace prefdom
