#include "prefdom/search_min.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "detail/combinatorics.hpp"
#include "detail/restriction_kernel.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

struct SubsetState {
    std::uint32_t member_mask = 0;
    std::array<int, kMaxAlternatives> members{};  // ascending alternative indices
    int k = 0;
    std::vector<std::uint64_t> keys;  // distinct suborders seen so far
};

// Backtracking over lexicographically increasing orders, all constraints
// maintained incrementally. See the header for the pruning rules.
class Searcher {
public:
    Searcher(int n, int k, std::size_t s, int target_size)
        : n_(n), k_(k), s_(s), target_(target_size) {
        detail::for_each_combination(n, k, [&](const int* idx, int kk) {
            SubsetState st;
            st.k = kk;
            for (int i = 0; i < kk; ++i) {
                st.members[static_cast<std::size_t>(i)] = idx[i];
                st.member_mask |= 1u << idx[i];
            }
            subsets_.push_back(std::move(st));
            return true;
        });
        for (std::size_t si = 0; si < subsets_.size(); ++si)
            for (int i = 0; i < k_; ++i)
                subsets_of_[static_cast<std::size_t>(subsets_[si].members[static_cast<std::size_t>(i)])]
                    .push_back(si);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    const std::uint32_t mm = (1u << a) | (1u << b) | (1u << c);
                    const std::size_t t = triple_masks_.size();
                    triple_masks_.push_back(0);
                    triple_members_.push_back(mm);
                    for (int v : {a, b, c})
                        triples_of_[static_cast<std::size_t>(v)].emplace_back(
                            t, v == a ? 0 : (v == b ? 1 : 2));
                }
        pos_.fill(0);
    }

    std::optional<std::vector<std::vector<int>>> run() {
        std::vector<int> ascending(static_cast<std::size_t>(n_));
        std::iota(ascending.begin(), ascending.end(), 0);
        if (!account_order(ascending)) return std::nullopt;
        chosen_.push_back(ascending);
        if (extend()) return chosen_;
        return std::nullopt;
    }

private:
    // Registers a completed order's cells and keys; false when infeasible.
    // Only used for the seed order (DFS-built orders register on the fly).
    bool account_order(const std::vector<int>& order) {
        for (std::size_t i = 0; i < order.size(); ++i)
            pos_[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        const int remaining = target_ - static_cast<int>(chosen_.size()) - 1;
        for (auto& st : subsets_) {
            const std::uint64_t key = subset_key(st);
            if (std::find(st.keys.begin(), st.keys.end(), key) == st.keys.end()) st.keys.push_back(key);
            if (st.keys.size() + static_cast<std::size_t>(remaining) < s_) return false;
        }
        std::uint32_t used = 0;
        for (int v : order) {
            for (const auto& [t, member] : triples_of_[static_cast<std::size_t>(v)]) {
                const int slot = std::popcount(used & triple_members_[t]);
                triple_masks_[t] |= 1u << (member * 3 + slot);
                if (triple_masks_[t] == detail::kAllCells) return false;
            }
            used |= 1u << v;
        }
        return true;
    }

    std::uint64_t subset_key(const SubsetState& st) const {
        std::uint32_t pr[kMaxAlternatives];
        for (int j = 0; j < st.k; ++j)
            pr[j] = (static_cast<std::uint32_t>(
                         pos_[static_cast<std::size_t>(st.members[static_cast<std::size_t>(j)])])
                     << 4) |
                    static_cast<std::uint32_t>(j);
        for (int j = 1; j < st.k; ++j) {
            const std::uint32_t v = pr[j];
            int i = j - 1;
            while (i >= 0 && pr[i] > v) {
                pr[i + 1] = pr[i];
                --i;
            }
            pr[i + 1] = v;
        }
        std::uint64_t key = 0;
        for (int j = 0; j < st.k; ++j) key |= static_cast<std::uint64_t>(pr[j] & 0xF) << (4 * j);
        return key;
    }

    // Chooses the next order, lexicographically above the last one. The
    // prefix buffer is shared with the enclosing DFS, so save and restore it.
    bool extend() {
        if (static_cast<int>(chosen_.size()) == target_) return true;
        std::vector<int> saved = std::move(prefix_);
        prefix_.clear();
        const bool found = dfs(0u, true);
        if (!found) prefix_ = std::move(saved);
        return found;
    }

    bool dfs(std::uint32_t used, bool tight) {
        const int depth = static_cast<int>(prefix_.size());
        if (depth == n_) {
            if (tight) return false;  // equal to the previous order
            chosen_.push_back(prefix_);
            if (extend()) return true;
            chosen_.pop_back();
            return false;
        }
        const std::vector<int>& lower = chosen_.back();
        const int remaining = target_ - static_cast<int>(chosen_.size()) - 1;
        for (int v = 0; v < n_; ++v) {
            if (used & (1u << v)) continue;
            if (tight && v < lower[static_cast<std::size_t>(depth)]) continue;
            const bool still_tight = tight && v == lower[static_cast<std::size_t>(depth)];

            const std::size_t mask_undo = mask_log_.size();
            const std::size_t key_undo = key_log_.size();
            bool ok = true;
            for (const auto& [t, member] : triples_of_[static_cast<std::size_t>(v)]) {
                const int slot = std::popcount(used & triple_members_[t]);
                const unsigned bit = 1u << (member * 3 + slot);
                if (triple_masks_[t] & bit) continue;
                if ((triple_masks_[t] | bit) == detail::kAllCells) {
                    ok = false;
                    break;
                }
                triple_masks_[t] |= bit;
                mask_log_.emplace_back(t, bit);
            }
            if (ok) {
                pos_[static_cast<std::size_t>(v)] = depth;
                const std::uint32_t used2 = used | (1u << v);
                for (std::size_t si : subsets_of_[static_cast<std::size_t>(v)]) {
                    SubsetState& st = subsets_[si];
                    if ((st.member_mask & ~used2) != 0) continue;  // not complete yet
                    const std::uint64_t key = subset_key(st);
                    const bool fresh =
                        std::find(st.keys.begin(), st.keys.end(), key) == st.keys.end();
                    if (fresh) {
                        st.keys.push_back(key);
                        key_log_.push_back(si);
                    }
                    if (st.keys.size() + static_cast<std::size_t>(remaining) < s_) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                prefix_.push_back(v);
                if (dfs(used | (1u << v), still_tight)) return true;
                prefix_.pop_back();
            }
            while (mask_log_.size() > mask_undo) {
                triple_masks_[mask_log_.back().first] &= ~mask_log_.back().second;
                mask_log_.pop_back();
            }
            while (key_log_.size() > key_undo) {
                subsets_[key_log_.back()].keys.pop_back();
                key_log_.pop_back();
            }
        }
        return false;
    }

    int n_, k_;
    std::size_t s_;
    int target_;
    std::vector<SubsetState> subsets_;
    std::array<std::vector<std::size_t>, kMaxAlternatives> subsets_of_;
    std::vector<unsigned> triple_masks_;
    std::vector<std::uint32_t> triple_members_;
    std::array<std::vector<std::pair<std::size_t, int>>, kMaxAlternatives> triples_of_;
    std::array<int, kMaxAlternatives> pos_;
    std::vector<std::vector<int>> chosen_;
    std::vector<int> prefix_;
    std::vector<std::pair<std::size_t, unsigned>> mask_log_;
    std::vector<std::size_t> key_log_;
};

std::size_t factorial_capped(int k, std::size_t cap) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::size_t>(i);
        if (f >= cap) return cap;
    }
    return f;
}

}  // namespace

std::optional<Domain> search_min_abundant(int n, int k, std::size_t s, int max_size,
                                          bool allow_long) {
    if (n < 1 || k < 1 || k > n || s < 1 || max_size < 1)
        throw precondition_error("search_min_abundant needs 1 <= k <= n, s >= 1, max_size >= 1");
    if (n > 9 || (n == 9 && !allow_long))
        throw capability_error(n == 9 ? "search_min_abundant for n = 9 needs the long-run flag"
                                      : "search_min_abundant is capped at 9 alternatives");
    // Abundance never exceeds min(|D|, k!), so sizes below s are hopeless.
    if (s > factorial_capped(k, s + 1)) return std::nullopt;
    for (int size = static_cast<int>(std::min<std::size_t>(s, static_cast<std::size_t>(max_size)));
         size <= max_size; ++size) {
        Searcher searcher(n, k, s, size);
        if (auto rows = searcher.run()) {
            std::vector<LinearOrder> orders;
            orders.reserve(rows->size());
            for (const auto& row : *rows) {
                std::vector<int> labels(row.begin(), row.end());
                for (int& x : labels) ++x;
                orders.emplace_back(std::move(labels));
            }
            return Domain(AlternativeSet::range(n), std::move(orders));
        }
    }
    return std::nullopt;
}

}  // namespace prefdom
