#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "prefdom/domain.hpp"
#include "prefdom/profile.hpp"

namespace prefdom {

/// N independent uniform draws with replacement from the source domain,
/// aggregated to a census. Identical (source, agents, seed) gives an
/// identical profile.
Profile sample_profile(const Domain& source, std::int64_t agents, std::uint64_t seed);

struct ExperimentConfig {
    Domain source;
    std::int64_t agents = 1;
    int trials = 1;
    std::vector<int> ks;             // subset sizes, each in 2..n
    std::uint64_t master_seed = 0;
    int workers = 0;                 // 0 = default_worker_count()
};

struct AbundanceHistogram {
    int k = 0;
    std::map<std::size_t, std::int64_t> counts;  // exact abundance -> number of trials
    double mean = 0.0;
    double stddev = 0.0;  // population standard deviation over trials
};

/// For each trial, samples a profile and records the exact abundance of its
/// support at each k. Per-trial seeds are derived from the master seed by
/// trial index, so results do not depend on the worker count or schedule.
std::vector<AbundanceHistogram> run_experiment(const ExperimentConfig& cfg);

/// PREFDOM_WORKERS when set and positive, otherwise hardware concurrency.
int default_worker_count();

}  // namespace prefdom
