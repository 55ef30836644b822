#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prefdom/abundance.hpp"
#include "prefdom/domain_io.hpp"
#include "prefdom/errors.hpp"
#include "prefdom/generators.hpp"
#include "support/oracles.hpp"
#include "support/random_domains.hpp"

using namespace prefdom;

namespace {

Domain make_domain(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<LinearOrder> orders;
    for (const auto& r : rows) orders.emplace_back(r);
    return Domain(AlternativeSet::range(n), std::move(orders));
}

Domain fig2() { return read_domain_file(std::string(PREFDOM_DATA_DIR) + "/fig2.domain"); }

}  // namespace

TEST_CASE("restriction sizes match the brute oracle on random domains") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Domain d = testsupport::random_domain(n, 20, rng);
        const auto rows = oracle::orders_of(d);
        std::vector<int> labels;
        for (int x = 1; x <= n; ++x) labels.push_back(x);
        for (int k = 1; k <= n; ++k)
            CHECK(exact_abundance(d, k).s == oracle::exact_abundance(rows, labels, k));
    }
}

TEST_CASE("figure 2 is exactly (3,4)-abundant with argmin (1,2,3)") {
    const auto r = exact_abundance(fig2(), 3);
    CHECK(r.s == 4);
    CHECK(r.argmin == AlternativeSet({1, 2, 3}));
    CHECK(is_abundant(fig2(), 3, 4));
    CHECK_FALSE(is_abundant(fig2(), 3, 5));
}

TEST_CASE("Black single-peaked n=5 is exactly (4,8)-abundant") {
    CHECK(exact_abundance(black_single_peaked(5), 4).s == 8);
}

TEST_CASE("single-order domains have abundance one everywhere") {
    const Domain d = make_domain(4, {{2, 4, 1, 3}});
    for (int k = 1; k <= 4; ++k) CHECK(exact_abundance(d, k).s == 1);
    CHECK(abundance_vector(d).entries == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("every nonempty domain is (k,1)-abundant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Domain d = testsupport::random_domain(4, 8, rng);
        for (int k = 1; k <= 4; ++k) CHECK(is_abundant(d, k, 1));
    }
}

TEST_CASE("Fishburn alternating abundance at n=4 and n=5") {
    CHECK(is_abundant(fishburn_alternating(4), 4, 9));
    CHECK(exact_abundance(fishburn_alternating(5), 4).s == 8);
    CHECK_FALSE(is_abundant(fishburn_alternating(5), 4, 9));
}

TEST_CASE("abundance vectors of the small families") {
    CHECK(abundance_vector(black_single_peaked(4)).entries == std::vector<std::size_t>{1, 2, 4, 8});
    CHECK(abundance_vector(fishburn_alternating(4)).entries == std::vector<std::size_t>{1, 2, 4, 9});
    CHECK(abundance_vector(fishburn_alternating(5)).entries ==
          std::vector<std::size_t>{1, 2, 4, 8, 20});
}

TEST_CASE("abundance parameter validation") {
    const Domain d = make_domain(3, {{1, 2, 3}});
    CHECK_THROWS_AS(exact_abundance(d, 0), precondition_error);
    CHECK_THROWS_AS(exact_abundance(d, 4), precondition_error);
    CHECK_THROWS_AS(is_abundant(d, 2, 0), precondition_error);
    CHECK_THROWS_AS(exact_abundance(Domain(AlternativeSet::range(3), {}), 2), precondition_error);
}

TEST_CASE("compare_abundance") {
    CHECK(compare_abundance(black_single_peaked(4), fishburn_alternating(4)) == Ordering::less);
    CHECK(compare_abundance(fishburn_alternating(4), black_single_peaked(4)) == Ordering::greater);
    const Domain d = black_single_peaked(5);
    CHECK(compare_abundance(d, d) == Ordering::equal);
    CHECK_THROWS_AS(compare_abundance(black_single_peaked(4), black_single_peaked(5)),
                    precondition_error);
}

TEST_CASE("Fishburn n=7 outranks Black n=7, separating at k=6") {
    const Domain black7 = black_single_peaked(7);
    const Domain fish7 = fishburn_alternating(7);
    const auto vb = abundance_vector(black7).entries;
    const auto vf = abundance_vector(fish7).entries;
    CHECK(vb == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64});
    CHECK(vf == std::vector<std::size_t>{1, 2, 4, 8, 16, 42, 100});
    CHECK(compare_abundance(black7, fish7) == Ordering::less);
}

TEST_CASE("abundance sums") {
    CHECK(abundance_sum(make_domain(3, {{1, 2, 3}}), 2) == 3);
    CHECK(abundance_sum(black_single_peaked(3), 2) == 6);
    CHECK(abundance_sum(unrestricted_domain(3), 2) == 6);
}

TEST_CASE("abundance is monotone under domain inclusion") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Domain big = testsupport::random_domain(n, 12, rng);
        if (big.size() < 2) continue;
        std::vector<LinearOrder> sub(big.orders().begin(),
                                     big.orders().begin() + 1 + static_cast<long>(rng() % (big.size() - 1)));
        const Domain small(big.alts(), std::move(sub));
        for (int k = 1; k <= n; ++k)
            CHECK(exact_abundance(small, k).s <= exact_abundance(big, k).s);
    }
}

TEST_CASE("abundance vector entries are nondecreasing and end at |D|") {
    std::mt19937_64 rng(979);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Domain d = testsupport::random_domain(n, 14, rng);
        const auto v = abundance_vector(d).entries;
        CHECK(v.front() == 1);
        CHECK(v.back() == d.size());
        for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] <= v[i]);
    }
}

TEST_CASE("copious implies ample on the generated families") {
    for (int n = 3; n <= 6; ++n) {
        for (const Domain& d : {black_single_peaked(n), caterpillar_group_separable(n),
                                single_crossing_path(n), fishburn_alternating(std::max(n, 3))}) {
            if (is_abundant(d, 3, 4)) CHECK(is_abundant(d, 2, 2));
        }
    }
}
