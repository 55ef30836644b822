#pragma once

#include <vector>

#include "prefdom/alternative_set.hpp"
#include "prefdom/domain.hpp"

namespace prefdom {

/// All orders outside the domain whose addition keeps it a Condorcet domain,
/// in lexicographic order. Empty iff the domain is maximal.
/// Requires a Condorcet domain; capped at n <= 10.
std::vector<LinearOrder> admissible_orders(const Domain& d);

/// True iff no order can be added without breaking the Condorcet property.
bool is_maximal(const Domain& d);

/// The maximal Condorcet domain obtained by repeatedly adding the
/// lexicographically least admissible order. Deterministic.
Domain close_to_maximal(const Domain& d);

struct DiscordanceSubsetReport {
    AlternativeSet subset;
    std::size_t restriction_size = 0;
    bool maximal = false;
};

struct DiscordanceReport {
    bool discordant = false;
    std::vector<DiscordanceSubsetReport> subsets;  // one per (n-1)-subset, lexicographic
};

/// A maximal Condorcet domain is discordant when none of its restrictions to
/// n-1 alternatives is maximal. Requires a maximal Condorcet domain with
/// n >= 4; anything else is a precondition error.
DiscordanceReport is_discordant(const Domain& d);

}  // namespace prefdom
