#include "prefdom/profile.hpp"

#include <algorithm>
#include <map>

#include "prefdom/errors.hpp"

namespace prefdom {

Profile::Profile(AlternativeSet alts, std::vector<CensusEntry> census)
    : alts_(std::move(alts)) {
    if (census.empty()) throw precondition_error("a profile needs at least one agent");
    std::map<LinearOrder, std::int64_t> merged;
    for (auto& entry : census) {
        if (entry.count < 1)
            throw precondition_error("census multiplicities must be positive");
        if (!entry.order.is_permutation_of(alts_))
            throw precondition_error("census order '" + entry.order.to_string() +
                                     "' is not a permutation of {" + alts_.to_string() + "}");
        merged[std::move(entry.order)] += entry.count;
    }
    census_.reserve(merged.size());
    for (auto& [order, count] : merged) {
        total_ += count;
        census_.push_back(CensusEntry{count, order});
    }
}

bool operator==(const Profile& a, const Profile& b) {
    if (a.alts_ != b.alts_ || a.census_.size() != b.census_.size()) return false;
    for (std::size_t i = 0; i < a.census_.size(); ++i)
        if (a.census_[i].count != b.census_[i].count || a.census_[i].order != b.census_[i].order)
            return false;
    return true;
}

Domain support(const Profile& p) {
    std::vector<LinearOrder> orders;
    orders.reserve(p.census().size());
    for (const auto& entry : p.census()) orders.push_back(entry.order);
    return Domain(p.alts(), std::move(orders));
}

Profile restrict_profile(const Profile& p, const AlternativeSet& subset) {
    if (!subset.subset_of(p.alts()))
        throw precondition_error("subset {" + subset.to_string() + "} is not contained in {" +
                                 p.alts().to_string() + "}");
    std::vector<CensusEntry> entries;
    entries.reserve(p.census().size());
    for (const auto& entry : p.census()) {
        std::vector<int> sub;
        sub.reserve(static_cast<std::size_t>(subset.size()));
        for (int x : entry.order.ranking())
            if (subset.contains(x)) sub.push_back(x);
        entries.push_back(CensusEntry{entry.count, LinearOrder(std::move(sub))});
    }
    return Profile(subset, std::move(entries));  // the constructor merges collisions
}

}  // namespace prefdom
