#include "prefdom/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "detail/parallel.hpp"
#include "prefdom/abundance.hpp"
#include "prefdom/errors.hpp"
#include "prefdom/rng.hpp"

namespace prefdom {

Profile sample_profile(const Domain& source, std::int64_t agents, std::uint64_t seed) {
    if (source.empty()) throw precondition_error("cannot sample from an empty domain");
    if (agents < 1) throw precondition_error("a profile needs at least one agent");
    SplitMix64 rng(seed);
    std::map<std::uint64_t, std::int64_t> counts;
    for (std::int64_t i = 0; i < agents; ++i) ++counts[rng.bounded(source.size())];
    std::vector<CensusEntry> census;
    census.reserve(counts.size());
    for (const auto& [idx, count] : counts)
        census.push_back(CensusEntry{count, source.order(idx)});
    return Profile(source.alts(), std::move(census));
}

int default_worker_count() {
    if (const char* env = std::getenv("PREFDOM_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<AbundanceHistogram> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.source.empty()) throw precondition_error("experiment source must be nonempty");
    if (cfg.agents < 1) throw precondition_error("agents must be at least 1");
    if (cfg.trials < 1) throw precondition_error("trials must be at least 1");
    if (cfg.ks.empty()) throw precondition_error("at least one subset size k is required");
    for (int k : cfg.ks)
        if (k < 2 || k > cfg.source.num_alternatives())
            throw precondition_error("every k must lie in 2..n, got " + std::to_string(k));

    // One result slot per trial; trial seeds derive from the master seed, so
    // the outcome is independent of worker count and schedule.
    std::vector<std::vector<std::size_t>> per_trial(static_cast<std::size_t>(cfg.trials));
    const int workers = cfg.workers > 0 ? cfg.workers : default_worker_count();
    detail::parallel_for(cfg.trials, workers, [&](int trial) {
        const Profile p = sample_profile(cfg.source, cfg.agents,
                                         stream_seed(cfg.master_seed, static_cast<std::uint64_t>(trial)));
        const Domain supp = support(p);
        auto& row = per_trial[static_cast<std::size_t>(trial)];
        row.reserve(cfg.ks.size());
        for (int k : cfg.ks) row.push_back(exact_abundance(supp, k).s);
    });

    std::vector<AbundanceHistogram> out;
    out.reserve(cfg.ks.size());
    for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
        AbundanceHistogram h;
        h.k = cfg.ks[ki];
        double sum = 0, sum2 = 0;
        for (const auto& row : per_trial) {
            const std::size_t s = row[ki];
            ++h.counts[s];
            sum += static_cast<double>(s);
            sum2 += static_cast<double>(s) * static_cast<double>(s);
        }
        const double trials = static_cast<double>(cfg.trials);
        h.mean = sum / trials;
        const double var = std::max(0.0, sum2 / trials - h.mean * h.mean);
        h.stddev = std::sqrt(var);
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace prefdom
