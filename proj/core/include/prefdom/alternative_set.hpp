#pragma once

#include <compare>
#include <string>
#include <vector>

namespace prefdom {

// Hard structural limit; enumeration-based operations declare their own,
// much smaller, caps.
inline constexpr int kMaxAlternatives = 16;

/// An ascending set of distinct positive integer labels. The ascending label
/// order doubles as the societal axis against which Fishburn-format never
/// conditions are read.
class AlternativeSet {
public:
    explicit AlternativeSet(std::vector<int> labels);

    // {1, 2, ..., n}
    static AlternativeSet range(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    int label(int index) const { return labels_[static_cast<std::size_t>(index)]; }
    const std::vector<int>& labels() const { return labels_; }

    bool contains(int label) const;
    // Position of the label along the axis, -1 when absent.
    int index_of(int label) const;
    bool subset_of(const AlternativeSet& other) const;
    // True when the labels are exactly 1..size.
    bool is_range() const;

    std::string to_string() const;

    friend auto operator<=>(const AlternativeSet&, const AlternativeSet&) = default;

private:
    std::vector<int> labels_;
};

}  // namespace prefdom
