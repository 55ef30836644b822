#pragma once

#include <cstdint>
#include <vector>

#include "prefdom/alternative_set.hpp"
#include "prefdom/domain.hpp"
#include "prefdom/linear_order.hpp"

namespace prefdom {

struct CensusEntry {
    std::int64_t count = 0;
    LinearOrder order;
};

/// A census of (multiplicity, order) pairs over a common alternative set.
/// Entries are stored sorted by order with distinct orders and positive
/// multiplicities; profiles are agent-order free by construction.
class Profile {
public:
    Profile(AlternativeSet alts, std::vector<CensusEntry> census);

    const AlternativeSet& alts() const { return alts_; }
    int num_alternatives() const { return alts_.size(); }
    const std::vector<CensusEntry>& census() const { return census_; }
    std::int64_t num_agents() const { return total_; }
    bool unanimous() const { return census_.size() == 1; }

    friend bool operator==(const Profile& a, const Profile& b);

private:
    AlternativeSet alts_;
    std::vector<CensusEntry> census_;
    std::int64_t total_ = 0;
};

/// The set of distinct orders occurring in the profile.
Domain support(const Profile& p);

/// Restriction of every order to the subset, with multiplicities of
/// colliding suborders summed; the agent count is preserved.
Profile restrict_profile(const Profile& p, const AlternativeSet& subset);

}  // namespace prefdom
