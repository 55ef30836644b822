#pragma once

#include <array>
#include <optional>
#include <vector>

#include "prefdom/domain.hpp"
#include "prefdom/never_condition.hpp"

namespace prefdom {

/// Result of the per-triple value restriction test. is_cd holds iff every
/// triple satisfies at least one never condition (Sen's criterion).
struct CondorcetReport {
    bool is_cd = false;
    // Lexicographically least violating triple, present iff !is_cd.
    std::optional<std::array<int, 3>> witness;
    // One entry per triple of the alternative set, in lexicographic order.
    std::vector<std::pair<std::array<int, 3>, std::vector<NeverCondition>>> per_triple;
};

/// All never conditions the triple a < b < c satisfies across the domain,
/// ordered by (member, slot). Empty iff the triple's patterns cover all nine
/// (alternative, place) cells.
std::vector<NeverCondition> satisfied_conditions(const Domain& d, std::array<int, 3> triple);

/// Sen's value-restriction test over every triple. Domains on fewer than
/// three alternatives are vacuously Condorcet.
CondorcetReport is_condorcet(const Domain& d);

/// Brute-force majority oracle: true iff every 3-voter multiset profile drawn
/// from the domain has a transitive strict majority relation. Capped at
/// |d| <= 12 and n <= 6; an independent cross-check for is_condorcet.
bool majority_oracle_check(const Domain& d);

}  // namespace prefdom
