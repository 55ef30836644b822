#include "prefdom/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

using nlohmann::json;

json triple_json(const std::array<int, 3>& t) { return json::array({t[0], t[1], t[2]}); }

std::string triple_key(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const CondorcetReport& report) {
    json per = json::object();
    for (const auto& [triple, conds] : report.per_triple) {
        json list = json::array();
        for (const auto& c : conds) list.push_back(c.fishburn_string());
        per[triple_key(triple)] = std::move(list);
    }
    json j{{"is_cd", report.is_cd},
           {"witness", report.witness ? triple_json(*report.witness) : json(nullptr)},
           {"per_triple", std::move(per)}};
    return dump(j);
}

std::string to_json(const DiscordanceReport& report) {
    json subsets = json::array();
    for (const auto& row : report.subsets)
        subsets.push_back(json{{"subset", row.subset.labels()},
                               {"restriction_size", row.restriction_size},
                               {"maximal", row.maximal}});
    return dump(json{{"discordant", report.discordant}, {"subsets", std::move(subsets)}});
}

std::string to_json(const AbundanceResult& result, int n) {
    return dump(json{{"n", n}, {"k", result.k}, {"s", result.s}, {"argmin", result.argmin.labels()}});
}

std::string to_json(const AbundanceVector& vec, int n) {
    json argmins = json::array();
    for (const auto& a : vec.argmins) argmins.push_back(a.labels());
    return dump(json{{"n", n}, {"vector", vec.entries}, {"argmins", std::move(argmins)}});
}

std::string to_json(const UniformNeverSubset& result) {
    return dump(json{{"subset", result.subset.labels()},
                     {"size", result.subset.size()},
                     {"condition", result.condition.to_string()}});
}

std::string to_json(const IndexValue& value) {
    json j{{"kind", to_string(value.kind)}, {"value", value.value}};
    j["k"] = value.k ? json(*value.k) : json(nullptr);
    if (value.argmin) j["argmin"] = value.argmin->labels();
    return dump(j);
}

std::string comparison_json(Ordering verdict, const AbundanceVector& v1, const AbundanceVector& v2) {
    return dump(json{{"verdict", to_string(verdict)},
                     {"vector1", v1.entries},
                     {"vector2", v2.entries}});
}

std::string to_json(const Profile& p) {
    json census = json::array();
    for (const auto& entry : p.census())
        census.push_back(json{{"count", entry.count}, {"order", entry.order.ranking()}});
    json j{{"n", p.num_alternatives()}, {"census", std::move(census)}};
    if (!p.alts().is_range()) j["alternatives"] = p.alts().labels();
    return dump(j);
}

Profile profile_from_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid profile JSON: ") + e.what());
    }
    try {
        AlternativeSet alts = j.contains("alternatives")
                                  ? AlternativeSet(j["alternatives"].get<std::vector<int>>())
                                  : AlternativeSet::range(j.at("n").get<int>());
        std::vector<CensusEntry> census;
        for (const auto& entry : j.at("census"))
            census.push_back(CensusEntry{entry.at("count").get<std::int64_t>(),
                                         LinearOrder(entry.at("order").get<std::vector<int>>())});
        return Profile(std::move(alts), std::move(census));
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid profile JSON: ") + e.what());
    }
}

std::string experiment_json(const ExperimentConfig& cfg, const std::vector<AbundanceHistogram>& hs) {
    json histograms = json::array();
    for (const auto& h : hs) {
        json counts = json::object();
        for (const auto& [s, freq] : h.counts) counts[std::to_string(s)] = freq;
        histograms.push_back(json{{"k", h.k},
                                  {"mean", h.mean},
                                  {"stddev", h.stddev},
                                  {"counts", std::move(counts)}});
    }
    return dump(json{{"agents", cfg.agents},
                     {"trials", cfg.trials},
                     {"seed", cfg.master_seed},
                     {"histograms", std::move(histograms)}});
}

std::string experiment_csv(const std::vector<AbundanceHistogram>& hs) {
    std::ostringstream os;
    os << "k,s,frequency\n";
    for (const auto& h : hs)
        for (const auto& [s, freq] : h.counts) os << h.k << "," << s << "," << freq << "\n";
    return os.str();
}

}  // namespace prefdom
