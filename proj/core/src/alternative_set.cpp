#include "prefdom/alternative_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "prefdom/errors.hpp"

namespace prefdom {

AlternativeSet::AlternativeSet(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw precondition_error("alternative set must be nonempty");
    if (labels_.size() > static_cast<std::size_t>(kMaxAlternatives))
        throw capability_error("alternative sets larger than " + std::to_string(kMaxAlternatives) +
                               " are not supported");
    int prev = 0;
    for (int x : labels_) {
        if (x < 1) throw precondition_error("alternative labels must be positive, got " + std::to_string(x));
        if (x <= prev) throw precondition_error("alternative labels must be strictly increasing");
        prev = x;
    }
}

AlternativeSet AlternativeSet::range(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 1);
    return AlternativeSet(std::move(v));
}

bool AlternativeSet::contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

int AlternativeSet::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

bool AlternativeSet::subset_of(const AlternativeSet& other) const {
    return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

bool AlternativeSet::is_range() const { return labels_.back() == size(); }

std::string AlternativeSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) os << ' ';
        os << labels_[i];
    }
    return os.str();
}

}  // namespace prefdom
