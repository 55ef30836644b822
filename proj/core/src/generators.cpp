#include "prefdom/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "detail/combinatorics.hpp"
#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

void check_generation_cap(int n, bool allow_long, const char* what) {
    if (n <= 10) return;
    if (n == 11 && allow_long) return;
    if (n == 11)
        throw capability_error(std::string(what) +
                               " for n = 11 needs the long-run flag; larger n is unsupported");
    throw capability_error(std::string(what) + " is capped at 11 alternatives");
}

}  // namespace

Domain generate_from_never_law(const NeverLaw& law, bool allow_long) {
    const int n = law.n();
    check_generation_cap(n, allow_long, "never-law generation");

    struct Ref {
        std::size_t triple;
        int member;
        std::uint32_t member_mask;
    };
    std::vector<std::vector<Ref>> refs(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const std::size_t t = detail::triple_rank(n, a, b, c);
                const std::uint32_t mm = (1u << a) | (1u << b) | (1u << c);
                refs[static_cast<std::size_t>(a)].push_back({t, 0, mm});
                refs[static_cast<std::size_t>(b)].push_back({t, 1, mm});
                refs[static_cast<std::size_t>(c)].push_back({t, 2, mm});
            }

    std::vector<LinearOrder> out;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(n));

    // Best-first construction: placing label v fixes v's slot in every triple
    // containing v, so a forbidden (member, slot) cell rejects the whole
    // subtree at once.
    auto dfs = [&](auto&& self, std::uint32_t used) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            std::vector<int> labels(chosen.begin(), chosen.end());
            for (int& x : labels) ++x;
            out.emplace_back(std::move(labels));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            bool ok = true;
            for (const Ref& r : refs[static_cast<std::size_t>(v)]) {
                const int slot = std::popcount(used & r.member_mask);
                if (law.mask_at(r.triple) & (1u << (r.member * 3 + slot))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, used | (1u << v));
            chosen.pop_back();
        }
    };
    dfs(dfs, 0u);
    return Domain(AlternativeSet::range(n), std::move(out));
}

NeverLaw black_law(int n) {
    NeverLaw law(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) law.assign({a, b, c}, FishburnCondition{2, 3});
    return law;
}

NeverLaw fishburn_alternating_law(int n) {
    NeverLaw law(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                law.assign({a, b, c}, b % 2 == 1 ? FishburnCondition{2, 1} : FishburnCondition{2, 3});
    return law;
}

NeverLaw set_alternating_law(int n, const AlternativeSet& a) {
    if (!a.subset_of(AlternativeSet::range(n)))
        throw precondition_error("set-alternating subset must be contained in {1..n}");
    NeverLaw law(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z)
                law.assign({x, y, z}, a.contains(y) ? FishburnCondition{1, 3} : FishburnCondition{3, 1});
    return law;
}

Domain black_single_peaked(int n) {
    if (n < 2 || n > 10) throw capability_error("black_single_peaked supports 2 <= n <= 10");
    return generate_from_never_law(black_law(n));
}

Domain fishburn_alternating(int n, bool allow_long) {
    if (n < 3) throw precondition_error("fishburn_alternating needs at least 3 alternatives");
    check_generation_cap(n, allow_long, "fishburn_alternating");
    return generate_from_never_law(fishburn_alternating_law(n), allow_long);
}

Domain set_alternating(int n, const AlternativeSet& a) {
    if (n < 2 || n > 10) throw capability_error("set_alternating supports 2 <= n <= 10");
    return generate_from_never_law(set_alternating_law(n, a));
}

Domain caterpillar_group_separable(int n) {
    if (n < 1 || n > kMaxAlternatives)
        throw precondition_error("caterpillar_group_separable supports 1 <= n <= " +
                                 std::to_string(kMaxAlternatives));
    std::vector<std::vector<int>> rows{{n}};
    for (int i = n - 1; i >= 1; --i) {
        std::vector<std::vector<int>> next;
        next.reserve(rows.size() * 2);
        for (const auto& w : rows) {
            std::vector<int> before{i};
            before.insert(before.end(), w.begin(), w.end());
            next.push_back(std::move(before));
            std::vector<int> after = w;
            after.push_back(i);
            next.push_back(std::move(after));
        }
        rows = std::move(next);
    }
    std::vector<LinearOrder> orders;
    orders.reserve(rows.size());
    for (auto& r : rows) orders.emplace_back(std::move(r));
    return Domain(AlternativeSet::range(n), std::move(orders));
}

Domain single_crossing_path(int n) {
    if (n < 2 || n > kMaxAlternatives)
        throw precondition_error("single_crossing_path supports 2 <= n <= " +
                                 std::to_string(kMaxAlternatives));
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 1);
    std::vector<LinearOrder> path;
    path.emplace_back(cur);
    for (;;) {
        bool swapped = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] < cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                path.emplace_back(cur);
                swapped = true;
                break;
            }
        }
        if (!swapped) break;
    }
    return Domain(AlternativeSet::range(n), std::move(path));
}

Domain s_construction(const Domain& d1, const Domain& d2) {
    for (int x : d1.alts().labels())
        if (d2.alts().contains(x))
            throw precondition_error("s_construction inputs must have disjoint alternative sets; both contain " +
                                     std::to_string(x));
    std::vector<int> merged = d1.alts().labels();
    merged.insert(merged.end(), d2.alts().labels().begin(), d2.alts().labels().end());
    std::sort(merged.begin(), merged.end());
    AlternativeSet alts(std::move(merged));

    std::vector<LinearOrder> orders;
    orders.reserve(d1.size() * d2.size() * 2);
    for (const auto& u : d1.orders())
        for (const auto& v : d2.orders()) {
            std::vector<int> uv = u.ranking();
            uv.insert(uv.end(), v.ranking().begin(), v.ranking().end());
            orders.emplace_back(std::move(uv));
            std::vector<int> vu = v.ranking();
            vu.insert(vu.end(), u.ranking().begin(), u.ranking().end());
            orders.emplace_back(std::move(vu));
        }
    return Domain(std::move(alts), std::move(orders));
}

Domain unrestricted_domain(int n, bool allow_long) {
    if (n < 1) throw precondition_error("unrestricted_domain needs at least one alternative");
    if (n > 9 || (n == 9 && !allow_long))
        throw capability_error(n == 9
                                   ? "unrestricted_domain for n = 9 needs the long-run flag"
                                   : "unrestricted_domain is capped at 9 alternatives");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<LinearOrder> orders;
    do {
        orders.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Domain(AlternativeSet::range(n), std::move(orders));
}

}  // namespace prefdom
