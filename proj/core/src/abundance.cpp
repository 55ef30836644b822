#include "prefdom/abundance.hpp"

#include <algorithm>

#include "detail/combinatorics.hpp"
#include "detail/restriction_kernel.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

void check_k(const Domain& d, int k) {
    if (d.empty()) throw precondition_error("abundance is undefined for the empty domain");
    if (k < 1 || k > d.num_alternatives())
        throw precondition_error("k must lie in 1.." + std::to_string(d.num_alternatives()) +
                                 ", got " + std::to_string(k));
}

AlternativeSet labels_for(const Domain& d, const int* idx, int k) {
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) labels.push_back(d.alts().label(idx[i]));
    return AlternativeSet(std::move(labels));
}

}  // namespace

AbundanceResult exact_abundance(const Domain& d, int k) {
    check_k(d, k);
    detail::KeySet keys;
    std::size_t best = SIZE_MAX;
    std::vector<int> best_idx;
    detail::for_each_combination(d.num_alternatives(), k, [&](const int* idx, int kk) {
        // A subset that reaches the current minimum cannot improve it, so the
        // count may stop there; only strict improvements move the argmin,
        // which keeps it the lexicographically first minimizer.
        const std::size_t size = detail::restriction_size(d, idx, kk, keys, best);
        if (size < best) {
            best = size;
            best_idx.assign(idx, idx + kk);
        }
        return best > 1;
    });
    return AbundanceResult{k, best, labels_for(d, best_idx.data(), k)};
}

bool is_abundant(const Domain& d, int k, std::size_t s) {
    check_k(d, k);
    if (s < 1) throw precondition_error("s must be at least 1");
    detail::KeySet keys;
    bool ok = true;
    detail::for_each_combination(d.num_alternatives(), k, [&](const int* idx, int kk) {
        if (detail::restriction_size(d, idx, kk, keys, s) < s) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

AbundanceVector abundance_vector(const Domain& d, bool allow_long) {
    if (d.empty()) throw precondition_error("abundance is undefined for the empty domain");
    const int n = d.num_alternatives();
    if (n > 12 && !allow_long)
        throw capability_error("full abundance vectors are capped at 12 alternatives "
                               "(pass the long-run flag to override)");
    AbundanceVector vec;
    vec.entries.reserve(static_cast<std::size_t>(n));
    vec.argmins.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        AbundanceResult r = exact_abundance(d, k);
        vec.entries.push_back(r.s);
        vec.argmins.push_back(std::move(r.argmin));
    }
    return vec;
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        default: return "greater";
    }
}

Ordering compare_abundance(const Domain& d1, const Domain& d2, bool allow_long) {
    if (d1.num_alternatives() != d2.num_alternatives())
        throw precondition_error("compared domains must have the same number of alternatives");
    const auto v1 = abundance_vector(d1, allow_long).entries;
    const auto v2 = abundance_vector(d2, allow_long).entries;
    if (v1 < v2) return Ordering::less;
    if (v2 < v1) return Ordering::greater;
    return Ordering::equal;
}

std::uint64_t abundance_sum(const Domain& d, int k) {
    check_k(d, k);
    detail::KeySet keys;
    std::uint64_t sum = 0;
    detail::for_each_combination(d.num_alternatives(), k, [&](const int* idx, int kk) {
        sum += detail::restriction_size(d, idx, kk, keys);
        return true;
    });
    return sum;
}

}  // namespace prefdom
