#include "prefdom/diversity.hpp"

#include <algorithm>
#include <cmath>

#include "detail/combinatorics.hpp"
#include "detail/restriction_kernel.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

std::string to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::supp: return "supp";
        case IndexKind::supp_k: return "supp_k";
        case IndexKind::abundance_k: return "abundance_k";
        case IndexKind::entropy_k: return "entropy_k";
        case IndexKind::abundance_sum_k: return "abundance_sum_k";
        default: return "entropy_sum_k";
    }
}

std::optional<IndexKind> parse_index_kind(std::string_view text) {
    for (IndexKind kind : {IndexKind::supp, IndexKind::supp_k, IndexKind::abundance_k,
                           IndexKind::entropy_k, IndexKind::abundance_sum_k, IndexKind::entropy_sum_k})
        if (text == to_string(kind)) return kind;
    return std::nullopt;
}

double census_entropy(const Profile& p) {
    const double total = static_cast<double>(p.num_agents());
    double h = 0.0;
    for (const auto& entry : p.census()) {
        const double q = static_cast<double>(entry.count) / total;
        if (q > 0.0) h -= q * std::log(q);
    }
    return h;
}

namespace {

// Entropy of the census induced on a subset of alternative indices: keys of
// colliding suborders share mass.
double restricted_entropy(const Profile& p, const Domain& supp, const int* idx, int k) {
    // (key, count) pairs; census entries align with the support's orders.
    std::vector<std::pair<std::uint64_t, std::int64_t>> buckets;
    buckets.reserve(p.census().size());
    for (std::size_t i = 0; i < p.census().size(); ++i)
        buckets.emplace_back(detail::induced_key(supp.ranks(i), idx, k), p.census()[i].count);
    std::sort(buckets.begin(), buckets.end());
    const double total = static_cast<double>(p.num_agents());
    double h = 0.0;
    std::size_t i = 0;
    while (i < buckets.size()) {
        std::int64_t mass = 0;
        const std::uint64_t key = buckets[i].first;
        for (; i < buckets.size() && buckets[i].first == key; ++i) mass += buckets[i].second;
        const double q = static_cast<double>(mass) / total;
        h -= q * std::log(q);
    }
    return h;
}

}  // namespace

IndexValue compute_index(const Profile& p, IndexKind kind, std::optional<int> k) {
    IndexValue out;
    out.kind = kind;
    if (kind == IndexKind::supp) {
        out.value = static_cast<double>(support(p).size() - 1);
        return out;
    }
    if (!k) throw precondition_error("index kind " + to_string(kind) + " requires k");
    const int kk = *k;
    const int n = p.num_alternatives();
    if (kk < 1 || kk > n)
        throw precondition_error("k must lie in 1.." + std::to_string(n) + ", got " + std::to_string(kk));
    out.k = kk;

    const Domain supp = support(p);
    switch (kind) {
        case IndexKind::supp_k: {
            // Suborders on distinct subsets count as distinct objects, so the
            // union size is the plain sum; it is zero exactly for unanimity.
            detail::KeySet keys;
            std::uint64_t total = 0;
            detail::for_each_combination(n, kk, [&](const int* idx, int m) {
                total += detail::restriction_size(supp, idx, m, keys);
                return true;
            });
            out.value = static_cast<double>(total) - static_cast<double>(detail::binomial(n, kk));
            break;
        }
        case IndexKind::abundance_k: {
            AbundanceResult r = exact_abundance(supp, kk);
            out.value = static_cast<double>(r.s);
            out.argmin = std::move(r.argmin);
            break;
        }
        case IndexKind::abundance_sum_k:
            out.value = static_cast<double>(abundance_sum(supp, kk));
            break;
        case IndexKind::entropy_k: {
            double best = 0.0;
            std::vector<int> best_idx;
            detail::for_each_combination(n, kk, [&](const int* idx, int m) {
                const double h = restricted_entropy(p, supp, idx, m);
                if (best_idx.empty() || h < best) {
                    best = h;
                    best_idx.assign(idx, idx + m);
                }
                return true;
            });
            std::vector<int> labels;
            for (int i : best_idx) labels.push_back(p.alts().label(i));
            out.value = best;
            out.argmin = AlternativeSet(std::move(labels));
            break;
        }
        case IndexKind::entropy_sum_k: {
            double total = 0.0;
            detail::for_each_combination(n, kk, [&](const int* idx, int m) {
                total += restricted_entropy(p, supp, idx, m);
                return true;
            });
            out.value = total;
            break;
        }
        default: break;
    }
    return out;
}

Ordering compare_profiles(const Profile& p1, const Profile& p2, IndexKind kind, std::optional<int> k) {
    if (p1.num_alternatives() != p2.num_alternatives())
        throw precondition_error("compared profiles must have the same number of alternatives");
    const double v1 = compute_index(p1, kind, k).value;
    const double v2 = compute_index(p2, kind, k).value;
    if (v1 < v2) return Ordering::less;
    if (v2 < v1) return Ordering::greater;
    return Ordering::equal;
}

}  // namespace prefdom
