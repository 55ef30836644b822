#include "prefdom/maximality.hpp"

#include <bit>
#include <set>

#include "detail/restriction_kernel.hpp"
#include "prefdom/condorcet.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

// Shared state for scanning candidate orders against a Condorcet domain.
// Placing alternative v as the next-best fixes v's slot in every triple
// containing v (the already placed members beat it, the rest lose to it), so
// a candidate can be rejected the moment some triple's nine cells fill up.
class CandidateScanner {
public:
    explicit CandidateScanner(const Domain& d) : n_(d.num_alternatives()) {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for (int c = b + 1; c < n_; ++c) {
                    const int id = static_cast<int>(triples_.size());
                    triples_.push_back({{a, b, c},
                                        (1u << a) | (1u << b) | (1u << c)});
                    refs_[a].emplace_back(id, 0);
                    refs_[b].emplace_back(id, 1);
                    refs_[c].emplace_back(id, 2);
                }
        masks_.resize(triples_.size(), 0);
        for (std::size_t t = 0; t < triples_.size(); ++t) {
            const auto& m = triples_[t].members;
            for (std::size_t i = 0; i < d.size(); ++i) {
                masks_[t] |= detail::pattern_cells(d.ranks(i), m[0], m[1], m[2]);
                if (masks_[t] == detail::kAllCells) break;
            }
            if (masks_[t] == detail::kAllCells)
                throw precondition_error("input is not a Condorcet domain");
        }
    }

    // Permanently occupy the cells of an order given as alternative indices.
    void commit(const std::vector<int>& order_idx) {
        std::uint32_t used = 0;
        for (int v : order_idx) {
            for (const auto& [tid, member] : refs_[v]) {
                const int slot = std::popcount(used & triples_[static_cast<std::size_t>(tid)].member_mask);
                masks_[static_cast<std::size_t>(tid)] |= 1u << (member * 3 + slot);
            }
            used |= 1u << v;
        }
    }

    // Enumerates admissible complete orders in lexicographic index order.
    // visit gets the order as alternative indices; returning false stops.
    template <class Visitor>
    void scan(Visitor&& visit) {
        std::vector<int> chosen;
        chosen.reserve(static_cast<std::size_t>(n_));
        stop_ = false;
        dfs(0u, chosen, visit);
    }

private:
    template <class Visitor>
    void dfs(std::uint32_t used, std::vector<int>& chosen, Visitor& visit) {
        if (stop_) return;
        if (static_cast<int>(chosen.size()) == n_) {
            if (!visit(chosen)) stop_ = true;
            return;
        }
        for (int v = 0; v < n_ && !stop_; ++v) {
            if (used & (1u << v)) continue;
            std::size_t added = undo_.size();
            bool ok = true;
            for (const auto& [tid, member] : refs_[v]) {
                const std::size_t t = static_cast<std::size_t>(tid);
                const int slot = std::popcount(used & triples_[t].member_mask);
                const unsigned bit = 1u << (member * 3 + slot);
                if (masks_[t] & bit) continue;
                if ((masks_[t] | bit) == detail::kAllCells) {
                    ok = false;
                    break;
                }
                masks_[t] |= bit;
                undo_.emplace_back(tid, bit);
            }
            if (ok) {
                chosen.push_back(v);
                dfs(used | (1u << v), chosen, visit);
                chosen.pop_back();
            }
            while (undo_.size() > added) {
                masks_[static_cast<std::size_t>(undo_.back().first)] &= ~undo_.back().second;
                undo_.pop_back();
            }
        }
    }

    struct Triple {
        std::array<int, 3> members;
        std::uint32_t member_mask;
    };

    int n_;
    std::vector<Triple> triples_;
    std::array<std::vector<std::pair<int, int>>, kMaxAlternatives> refs_;
    std::vector<unsigned> masks_;
    std::vector<std::pair<int, unsigned>> undo_;
    bool stop_ = false;
};

LinearOrder to_order(const Domain& d, const std::vector<int>& order_idx) {
    std::vector<int> labels;
    labels.reserve(order_idx.size());
    for (int v : order_idx) labels.push_back(d.alts().label(v));
    return LinearOrder(std::move(labels));
}

void check_caps(const Domain& d) {
    if (d.num_alternatives() > 10)
        throw capability_error("maximality scans are capped at 10 alternatives");
    if (d.empty()) throw precondition_error("maximality is undefined for the empty domain");
}

}  // namespace

std::vector<LinearOrder> admissible_orders(const Domain& d) {
    check_caps(d);
    CandidateScanner scanner(d);
    std::vector<LinearOrder> out;
    scanner.scan([&](const std::vector<int>& idx) {
        LinearOrder o = to_order(d, idx);
        if (!d.contains(o)) out.push_back(std::move(o));
        return true;
    });
    return out;
}

bool is_maximal(const Domain& d) {
    check_caps(d);
    CandidateScanner scanner(d);
    bool found = false;
    scanner.scan([&](const std::vector<int>& idx) {
        if (d.contains(to_order(d, idx))) return true;
        found = true;
        return false;
    });
    return !found;
}

Domain close_to_maximal(const Domain& d) {
    check_caps(d);
    CandidateScanner scanner(d);
    std::set<LinearOrder> orders(d.orders().begin(), d.orders().end());
    for (;;) {
        std::vector<int> next;
        scanner.scan([&](const std::vector<int>& idx) {
            if (orders.count(to_order(d, idx))) return true;
            next = idx;
            return false;
        });
        if (next.empty()) break;
        scanner.commit(next);
        orders.insert(to_order(d, next));
    }
    return Domain(d.alts(), {orders.begin(), orders.end()});
}

DiscordanceReport is_discordant(const Domain& d) {
    const int n = d.num_alternatives();
    if (n < 4) throw precondition_error("discordance needs at least 4 alternatives");
    if (!is_condorcet(d).is_cd || !is_maximal(d))
        throw precondition_error("discordance is defined only for maximal Condorcet domains");

    DiscordanceReport report;
    report.discordant = true;
    // Dropping the largest alternative first yields the subsets in
    // lexicographic order.
    for (int drop = n - 1; drop >= 0; --drop) {
        std::vector<int> labels;
        labels.reserve(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
            if (i != drop) labels.push_back(d.alts().label(i));
        AlternativeSet subset(std::move(labels));
        Domain r = restrict_domain(d, subset);
        const bool maximal = is_maximal(r);
        if (maximal) report.discordant = false;
        report.subsets.push_back({std::move(subset), r.size(), maximal});
    }
    return report;
}

}  // namespace prefdom
