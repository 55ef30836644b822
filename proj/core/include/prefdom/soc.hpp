#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prefdom/profile.hpp"

namespace prefdom {

/// A PrefLib strict-order-complete document. Both the current '#'-metadata
/// format and the legacy comma-only header format are accepted; ties or
/// incomplete rankings are rejected.
struct SocDocument {
    int num_alternatives = 0;
    std::vector<std::string> names;       // 1-based; empty strings when unnamed
    std::int64_t declared_voters = -1;    // -1 when the file does not declare it
    std::vector<std::pair<std::int64_t, std::vector<int>>> rows;  // (count, ranking)
};

SocDocument parse_soc_document(std::istream& in);

/// Alternative labels are the file's 1-based indices. Throws data_error when
/// the census does not sum to the declared voter count.
Profile profile_from_soc(const SocDocument& doc);
Profile parse_soc(std::istream& in);

/// The alternative ranked first by every agent, when one exists.
std::optional<int> universally_top_alternative(const Profile& p);

/// Labels ordered most popular first: lower mean position wins, ties go to
/// the smaller label.
std::vector<int> alternatives_by_popularity(const Profile& p);

}  // namespace prefdom
