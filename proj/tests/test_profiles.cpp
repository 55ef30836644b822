#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "prefdom/diversity.hpp"
#include "prefdom/errors.hpp"
#include "prefdom/generators.hpp"
#include "prefdom/profile.hpp"

using namespace prefdom;

namespace {

Profile make_profile(int n, const std::vector<std::pair<std::int64_t, std::vector<int>>>& rows) {
    std::vector<CensusEntry> census;
    for (const auto& [count, order] : rows) census.push_back({count, LinearOrder(order)});
    return Profile(AlternativeSet::range(n), std::move(census));
}

Profile uniform_profile(const Domain& d) {
    std::vector<CensusEntry> census;
    for (const auto& o : d.orders()) census.push_back({1, o});
    return Profile(d.alts(), std::move(census));
}

}  // namespace

TEST_CASE("support and unanimity") {
    const Profile unanimous = make_profile(3, {{3, {1, 2, 3}}});
    CHECK(unanimous.unanimous());
    CHECK(support(unanimous).size() == 1);
    CHECK(unanimous.num_agents() == 3);

    const Profile two = make_profile(3, {{2, {1, 2, 3}}, {1, {3, 2, 1}}});
    CHECK(support(two).size() == 2);
    CHECK(two.num_agents() == 3);
}

TEST_CASE("profiles merge duplicate orders and reject bad counts") {
    const Profile merged = make_profile(3, {{2, {1, 2, 3}}, {3, {1, 2, 3}}});
    CHECK(merged.census().size() == 1);
    CHECK(merged.census().front().count == 5);
    CHECK_THROWS_AS(make_profile(3, {{0, {1, 2, 3}}}), precondition_error);
    CHECK_THROWS_AS(make_profile(3, {}), precondition_error);
}

TEST_CASE("restrict_profile merges colliding suborders and preserves N") {
    const Profile p = make_profile(3, {{2, {1, 2, 3}}, {1, {2, 1, 3}}});
    const Profile r = restrict_profile(p, AlternativeSet({1, 3}));
    REQUIRE(r.census().size() == 1);
    CHECK(r.census().front().count == 3);
    CHECK(r.census().front().order.ranking() == std::vector<int>{1, 3});
    CHECK(r.num_agents() == p.num_agents());

    const Profile q = make_profile(3, {{1, {1, 2, 3}}, {1, {3, 2, 1}}});
    const Profile rq = restrict_profile(q, AlternativeSet({1, 2}));
    CHECK(rq.census().size() == 2);
    CHECK(rq.num_agents() == 2);
}

TEST_CASE("supp index is zero exactly for unanimous profiles") {
    CHECK(compute_index(make_profile(3, {{5, {2, 1, 3}}}), IndexKind::supp).value == 0.0);
    CHECK(compute_index(make_profile(3, {{1, {1, 2, 3}}, {1, {2, 1, 3}}}), IndexKind::supp).value ==
          1.0);
}

TEST_CASE("entropy index of a two-order half-half profile is ln 2") {
    const Profile p = make_profile(3, {{2, {1, 2, 3}}, {2, {3, 2, 1}}});
    const auto v = compute_index(p, IndexKind::entropy_k, 2);
    CHECK(v.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("supp_k of the Black n=3 support at k=2") {
    const auto v = compute_index(uniform_profile(black_single_peaked(3)), IndexKind::supp_k, 2);
    CHECK(v.value == 3.0);  // (2+2+2) - C(3,2)
}

TEST_CASE("supp_k of a full-support profile is C(n,k)(k!-1)") {
    for (int n = 3; n <= 4; ++n) {
        const Profile p = uniform_profile(unrestricted_domain(n));
        CHECK(compute_index(p, IndexKind::supp_k, 2).value ==
              static_cast<double>(n * (n - 1) / 2 * (2 - 1)));
        CHECK(compute_index(p, IndexKind::supp_k, 3).value ==
              static_cast<double>(n * (n - 1) * (n - 2) / 6 * (6 - 1)));
    }
}

TEST_CASE("abundance_k of a profile equals the exact abundance of its support") {
    const Profile p = uniform_profile(black_single_peaked(4));
    for (int k = 1; k <= 4; ++k) {
        const auto v = compute_index(p, IndexKind::abundance_k, k);
        CHECK(v.value == static_cast<double>(exact_abundance(support(p), k).s));
    }
    CHECK(compute_index(p, IndexKind::abundance_sum_k, 2).value ==
          static_cast<double>(abundance_sum(support(p), 2)));
}

TEST_CASE("entropy bounds and the uniform maximum") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 2);
        std::vector<CensusEntry> census;
        const Domain base = unrestricted_domain(n);
        for (std::size_t i = 0; i < base.size(); ++i)
            if (rng() % 3 == 0)
                census.push_back({1 + static_cast<std::int64_t>(rng() % 5), base.order(i)});
        if (census.empty()) continue;
        const Profile p(AlternativeSet::range(n), std::move(census));
        for (int k = 2; k <= n; ++k) {
            const double h = compute_index(p, IndexKind::entropy_k, k).value;
            CHECK(h >= -1e-12);
            const Domain supp = support(p);
            double cap = 0;
            // ln of the largest restriction support size bounds every subset entropy
            cap = std::log(static_cast<double>(supp.size()));
            CHECK(h <= cap + 1e-12);
        }
    }
}

TEST_CASE("caterpillar uniform profile has entropy exactly ln 2^(k-1) at every subset") {
    const Profile p = uniform_profile(caterpillar_group_separable(5));
    for (int k = 2; k <= 5; ++k) {
        const auto v = compute_index(p, IndexKind::entropy_k, k);
        CHECK(v.value == doctest::Approx((k - 1) * std::log(2.0)).epsilon(1e-9));
        // min equals sum/C(n,k): all subsets agree
        const auto sum = compute_index(p, IndexKind::entropy_sum_k, k);
        double combos = 1;
        for (int i = 0; i < k; ++i) combos = combos * (5 - i) / (i + 1);
        CHECK(sum.value == doctest::Approx(combos * v.value).epsilon(1e-9));
    }
}

TEST_CASE("compare_profiles") {
    const Profile unanimous = make_profile(3, {{4, {1, 2, 3}}});
    const Profile mixed = make_profile(3, {{2, {1, 2, 3}}, {2, {3, 2, 1}}});
    CHECK(compare_profiles(unanimous, mixed, IndexKind::supp) == Ordering::less);
    CHECK(compare_profiles(mixed, mixed, IndexKind::supp) == Ordering::equal);
    CHECK(compare_profiles(mixed, unanimous, IndexKind::entropy_k, 2) == Ordering::greater);
    CHECK_THROWS_AS(compare_profiles(unanimous, make_profile(4, {{1, {1, 2, 3, 4}}}), IndexKind::supp),
                    precondition_error);
}

TEST_CASE("unanimous profiles rank at the bottom under every kind") {
    const Profile unanimous = make_profile(4, {{9, {2, 1, 4, 3}}});
    const Profile other = uniform_profile(black_single_peaked(4));
    for (IndexKind kind : {IndexKind::supp, IndexKind::supp_k, IndexKind::abundance_k,
                           IndexKind::entropy_k, IndexKind::abundance_sum_k, IndexKind::entropy_sum_k}) {
        const std::optional<int> k = kind == IndexKind::supp ? std::nullopt : std::optional<int>(3);
        CHECK(compare_profiles(unanimous, other, kind, k) != Ordering::greater);
    }
}

TEST_CASE("index parameter validation") {
    const Profile p = make_profile(3, {{1, {1, 2, 3}}});
    CHECK_THROWS_AS(compute_index(p, IndexKind::entropy_k), precondition_error);
    CHECK_THROWS_AS(compute_index(p, IndexKind::supp_k, 4), precondition_error);
    CHECK_NOTHROW(compute_index(p, IndexKind::supp));
}

TEST_CASE("index kind names round-trip") {
    for (IndexKind kind : {IndexKind::supp, IndexKind::supp_k, IndexKind::abundance_k,
                           IndexKind::entropy_k, IndexKind::abundance_sum_k, IndexKind::entropy_sum_k})
        CHECK(parse_index_kind(to_string(kind)) == kind);
    CHECK_FALSE(parse_index_kind("nope").has_value());
}
