#include "prefdom/domain.hpp"

#include <algorithm>
#include <numeric>

#include "prefdom/errors.hpp"

namespace prefdom {

Domain::Domain(AlternativeSet alts, std::vector<LinearOrder> orders)
    : alts_(std::move(alts)), orders_(std::move(orders)) {
    for (const auto& o : orders_)
        if (!o.is_permutation_of(alts_))
            throw precondition_error("order '" + o.to_string() + "' is not a permutation of {" +
                                     alts_.to_string() + "}");
    std::sort(orders_.begin(), orders_.end());
    orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());

    ranks_.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        ranks_[i].fill(0);
        const auto& r = orders_[i].ranking();
        for (std::size_t pos = 0; pos < r.size(); ++pos) {
            const int ai = alts_.index_of(r[pos]);
            ranks_[i][static_cast<std::size_t>(ai)] = static_cast<std::uint8_t>(pos);
        }
    }
}

bool Domain::contains(const LinearOrder& order) const {
    return std::binary_search(orders_.begin(), orders_.end(), order);
}

bool Domain::is_unitary() const {
    return contains(LinearOrder(alts_.labels()));
}

Domain restrict_domain(const Domain& d, const AlternativeSet& subset) {
    if (!subset.subset_of(d.alts()))
        throw precondition_error("subset {" + subset.to_string() + "} is not contained in {" +
                                 d.alts().to_string() + "}");
    std::vector<LinearOrder> induced;
    induced.reserve(d.size());
    for (const auto& o : d.orders()) {
        std::vector<int> sub;
        sub.reserve(static_cast<std::size_t>(subset.size()));
        for (int x : o.ranking())
            if (subset.contains(x)) sub.push_back(x);
        induced.emplace_back(std::move(sub));
    }
    return Domain(subset, std::move(induced));
}

TriplePatternSet triple_pattern_set(const Domain& d, std::array<int, 3> triple) {
    if (!(triple[0] < triple[1] && triple[1] < triple[2]))
        throw precondition_error("triple must be strictly increasing");
    for (int x : triple)
        if (!d.alts().contains(x))
            throw precondition_error("triple label " + std::to_string(x) + " is not an alternative");
    Domain r = restrict_domain(d, AlternativeSet({triple[0], triple[1], triple[2]}));
    return TriplePatternSet{triple, r.orders()};
}

Domain relabel(const Domain& d, const std::map<int, int>& map) {
    if (static_cast<int>(map.size()) != d.num_alternatives())
        throw precondition_error("relabeling must cover every alternative exactly once");
    std::vector<int> image;
    image.reserve(map.size());
    for (const auto& [from, to] : map) {
        if (d.alts().index_of(from) < 0)
            throw precondition_error("relabeling maps unknown label " + std::to_string(from));
        image.push_back(to);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw precondition_error("relabeling is not injective");
    AlternativeSet target(std::move(image));

    std::vector<LinearOrder> mapped;
    mapped.reserve(d.size());
    for (const auto& o : d.orders()) {
        std::vector<int> r;
        r.reserve(o.ranking().size());
        for (int x : o.ranking()) r.push_back(map.at(x));
        mapped.emplace_back(std::move(r));
    }
    return Domain(std::move(target), std::move(mapped));
}

namespace {

// Relabeled order lists for the map sending order `anchor` to 1..n.
std::vector<std::vector<int>> apply_anchor(const Domain& d, std::size_t anchor) {
    const int n = d.num_alternatives();
    std::array<int, kMaxAlternatives + 1> to{};  // dense map over alt index
    for (int pos = 0; pos < n; ++pos) {
        const int ai = d.alts().index_of(d.order(anchor).at(pos));
        to[static_cast<std::size_t>(ai)] = pos + 1;
    }
    std::vector<std::vector<int>> rows;
    rows.reserve(d.size());
    for (const auto& o : d.orders()) {
        std::vector<int> r;
        r.reserve(static_cast<std::size_t>(n));
        for (int x : o.ranking()) r.push_back(to[static_cast<std::size_t>(d.alts().index_of(x))]);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

Domain canonical_form(const Domain& d) {
    const int n = d.num_alternatives();
    if (n > 8) throw capability_error("canonical_form is capped at 8 alternatives");
    if (d.empty()) return Domain(AlternativeSet::range(n), {});

    // The least domain must contain the globally least order 12..n, so only
    // relabelings anchored at one of d's orders can win.
    std::vector<std::vector<int>> best;
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto rows = apply_anchor(d, i);
        if (best.empty() || rows < best) best = std::move(rows);
    }
    std::vector<LinearOrder> orders;
    orders.reserve(best.size());
    for (auto& r : best) orders.emplace_back(std::move(r));
    return Domain(AlternativeSet::range(n), std::move(orders));
}

std::pair<Domain, std::map<int, int>> make_unitary(const Domain& d) {
    if (d.empty()) throw precondition_error("make_unitary requires a nonempty domain");
    std::map<int, int> map;
    const LinearOrder& least = d.order(0);
    for (int pos = 0; pos < least.size(); ++pos) map[least.at(pos)] = d.alts().label(pos);
    return {relabel(d, map), std::move(map)};
}

}  // namespace prefdom
