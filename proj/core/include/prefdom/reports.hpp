#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "prefdom/abundance.hpp"
#include "prefdom/condorcet.hpp"
#include "prefdom/diversity.hpp"
#include "prefdom/maximality.hpp"
#include "prefdom/profile.hpp"
#include "prefdom/sampling.hpp"
#include "prefdom/uniform_subset.hpp"

// JSON report schemas are documented in the README. Emission is
// deterministic: object keys are sorted and floating point formatting is
// fixed, so identical inputs give byte-identical reports.

namespace prefdom {

std::string to_json(const CondorcetReport& report);
std::string to_json(const DiscordanceReport& report);
std::string to_json(const AbundanceResult& result, int n);
std::string to_json(const AbundanceVector& vec, int n);
std::string to_json(const UniformNeverSubset& result);
std::string to_json(const IndexValue& value);

std::string comparison_json(Ordering verdict, const AbundanceVector& v1, const AbundanceVector& v2);

// Profile JSON: { "n": ..., "census": [ { "count": ..., "order": [...] } ... ] }
// plus an "alternatives" array when the label set is not {1..n}.
std::string to_json(const Profile& p);
Profile profile_from_json(std::istream& in);

std::string experiment_json(const ExperimentConfig& cfg, const std::vector<AbundanceHistogram>& hs);
// Long format for plotting: header "k,s,frequency", one row per (k, s).
std::string experiment_csv(const std::vector<AbundanceHistogram>& hs);

}  // namespace prefdom
