#pragma once

#include <optional>

#include "prefdom/domain.hpp"
#include "prefdom/never_condition.hpp"

namespace prefdom {

struct UniformNeverSubset {
    AlternativeSet subset;
    FishburnCondition condition;
};

/// Largest subset of the alternatives such that one single Fishburn-format
/// condition is satisfied by every triple inside it; ties are broken towards
/// the lexicographically least subset, then the first condition in (member,
/// slot) order. Returns nothing when no such subset reaches
/// max(min_size, 3). Requires a unitary domain.
std::optional<UniformNeverSubset> find_uniform_never_subset(const Domain& d, int min_size);

}  // namespace prefdom
