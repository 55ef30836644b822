#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace prefdom {

/// A never condition in Fishburn's positional format: the member-th smallest
/// alternative of a triple (along the societal axis) never occupies the
/// slot-th place within the triple. Slot 1 = top, 2 = middle, 3 = bottom.
struct FishburnCondition {
    int member = 0;  // 1..3
    int slot = 0;    // 1..3

    std::string to_string() const;  // "2N3"
    friend auto operator<=>(const FishburnCondition&, const FishburnCondition&) = default;
};

// Parses "iNj" (case-insensitive 'n'); throws parse_error otherwise.
FishburnCondition parse_fishburn_condition(std::string_view text);

/// A never condition bound to a concrete triple a < b < c. The absolute form
/// (alternative x, forbidden place) and the Fishburn form (i, j) denote the
/// same constraint: x is the i-th smallest label of the triple and the place
/// is j.
struct NeverCondition {
    std::array<int, 3> triple{};
    FishburnCondition cond;

    int alternative() const { return triple[static_cast<std::size_t>(cond.member - 1)]; }
    // Absolute form, e.g. "5Nt" / "5Nm" / "5Nb".
    std::string absolute_string() const;
    // Fishburn form anchored to the triple, e.g. "2N3@(1,2,3)".
    std::string fishburn_string() const;

    friend auto operator<=>(const NeverCondition&, const NeverCondition&) = default;
};

}  // namespace prefdom
