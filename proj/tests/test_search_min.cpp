#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefdom/abundance.hpp"
#include "prefdom/condorcet.hpp"
#include "prefdom/domain_io.hpp"
#include "prefdom/errors.hpp"
#include "prefdom/search_min.hpp"

using namespace prefdom;

TEST_CASE("the natural order and its reverse form a (k,2)-abundant pair") {
    const auto d = search_min_abundant(2, 2, 2, 2);
    REQUIRE(d.has_value());
    CHECK(d->size() == 2);
    CHECK(d->order(0).ranking() == std::vector<int>{1, 2});
    CHECK(d->order(1).ranking() == std::vector<int>{2, 1});

    const auto d5 = search_min_abundant(5, 4, 2, 2);
    REQUIRE(d5.has_value());
    CHECK(d5->size() == 2);
    CHECK(is_abundant(*d5, 4, 2));
}

TEST_CASE("minimal (3,4)-abundant Condorcet domains of size 4 exist for n=5") {
    const auto d = search_min_abundant(5, 3, 4, 4);
    REQUIRE(d.has_value());
    CHECK(d->size() == 4);
    CHECK(is_condorcet(*d).is_cd);
    CHECK(is_abundant(*d, 3, 4));
    // minimality: no proper subset stays (3,4)-abundant
    for (std::size_t skip = 0; skip < d->size(); ++skip) {
        std::vector<LinearOrder> fewer;
        for (std::size_t i = 0; i < d->size(); ++i)
            if (i != skip) fewer.push_back(d->order(i));
        CHECK_FALSE(is_abundant(Domain(d->alts(), std::move(fewer)), 3, 4));
    }
    // determinism
    CHECK(*search_min_abundant(5, 3, 4, 4) == *d);
}

TEST_CASE("the n=8 search reproduces the known size-4 domain") {
    const auto d = search_min_abundant(8, 3, 4, 4);
    REQUIRE(d.has_value());
    CHECK(*d == read_domain_file(std::string(PREFDOM_DATA_DIR) + "/fig2.domain"));
}

TEST_CASE("a (3,3)-abundant size-3 domain exists for n=8") {
    const auto d = search_min_abundant(8, 3, 3, 3);
    REQUIRE(d.has_value());
    CHECK(d->size() == 3);
    CHECK(is_condorcet(*d).is_cd);
    CHECK(is_abundant(*d, 3, 3));
}

TEST_CASE("infeasible parameters return none quickly") {
    CHECK_FALSE(search_min_abundant(4, 2, 3, 6).has_value());  // s > k!
    CHECK_FALSE(search_min_abundant(5, 3, 4, 3).has_value());  // max_size < s
    CHECK_FALSE(search_min_abundant(3, 3, 6, 5).has_value());  // needs all six orders but paradox
}

TEST_CASE("no (3,5)-abundant Condorcet domain exists on three alternatives") {
    // each of the nine cells is occupied by exactly two of the six patterns,
    // so any five patterns cover all nine and kill the Condorcet property
    CHECK_FALSE(search_min_abundant(3, 3, 5, 5).has_value());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(search_min_abundant(0, 1, 1, 1), precondition_error);
    CHECK_THROWS_AS(search_min_abundant(4, 5, 1, 1), precondition_error);
    CHECK_THROWS_AS(search_min_abundant(10, 3, 4, 4), capability_error);
    CHECK_THROWS_AS(search_min_abundant(9, 3, 3, 3), capability_error);  // needs allow_long
}
