#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefdom/errors.hpp"
#include "prefdom/generators.hpp"
#include "prefdom/rng.hpp"
#include "prefdom/sampling.hpp"

using namespace prefdom;

TEST_CASE("splitmix64 matches the published reference stream") {
    // Vigna's splitmix64 test vector for seed 1234567
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("stream seeds differ per index and are stable") {
    CHECK(stream_seed(42, 0) != stream_seed(42, 1));
    CHECK(stream_seed(42, 0) == stream_seed(42, 0));
    CHECK(stream_seed(42, 0) != stream_seed(43, 0));
}

TEST_CASE("bounded draws stay in range") {
    SplitMix64 rng(99);
    for (int i = 0; i < 1000; ++i) CHECK(rng.bounded(7) < 7);
}

TEST_CASE("sampling a singleton domain is unanimous") {
    const Domain single(AlternativeSet::range(3), {LinearOrder({2, 1, 3})});
    const Profile p = sample_profile(single, 1, 7);
    CHECK(p.unanimous());
    CHECK(p.num_agents() == 1);
    const Profile many = sample_profile(single, 50, 7);
    CHECK(many.unanimous());
    CHECK(many.num_agents() == 50);
}

TEST_CASE("identical seeds give identical censuses") {
    const Domain src = black_single_peaked(5);
    CHECK(sample_profile(src, 40, 123) == sample_profile(src, 40, 123));
    CHECK_FALSE(sample_profile(src, 40, 123) == sample_profile(src, 40, 124));
}

TEST_CASE("support size never exceeds the agent count") {
    const Domain src = unrestricted_domain(6);
    const Profile p = sample_profile(src, 50, 2024);
    CHECK(support(p).size() <= 50);
    CHECK(p.num_agents() == 50);
}

TEST_CASE("sampling rejects empty sources") {
    CHECK_THROWS_AS(sample_profile(Domain(AlternativeSet::range(3), {}), 5, 1), precondition_error);
}

TEST_CASE("experiment histograms sum to the trial count") {
    ExperimentConfig cfg{black_single_peaked(5), 20, 100, {2, 3}, 777, 1};
    const auto hs = run_experiment(cfg);
    REQUIRE(hs.size() == 2);
    for (const auto& h : hs) {
        std::int64_t total = 0;
        for (const auto& [s, freq] : h.counts) total += freq;
        CHECK(total == 100);
    }
}

TEST_CASE("a singleton source yields the all-ones histogram") {
    const Domain single(AlternativeSet::range(4), {LinearOrder({1, 2, 3, 4})});
    ExperimentConfig cfg{single, 10, 5, {2, 3, 4}, 1, 1};
    for (const auto& h : run_experiment(cfg)) {
        REQUIRE(h.counts.size() == 1);
        CHECK(h.counts.at(1) == 5);
        CHECK(h.mean == 1.0);
        CHECK(h.stddev == 0.0);
    }
}

TEST_CASE("histogram keys never exceed the source abundance") {
    const Domain src = black_single_peaked(5);  // exactly (3,4)-abundant
    ExperimentConfig cfg{src, 30, 50, {3}, 99, 1};
    const auto hs = run_experiment(cfg);
    for (const auto& [s, freq] : hs.front().counts) {
        CHECK(s >= 1);
        CHECK(s <= 4);
    }
}

TEST_CASE("abundance concentrates on the source value as agents grow") {
    const Domain src = black_single_peaked(5);
    ExperimentConfig cfg{src, 300, 60, {3}, 31415, 1};
    const auto hs = run_experiment(cfg);
    CHECK(hs.front().counts.at(4) >= 57);  // nearly every trial reaches the cap
}

TEST_CASE("results are identical for any worker count") {
    ExperimentConfig serial{unrestricted_domain(5), 25, 64, {2, 3}, 5150, 1};
    ExperimentConfig parallel = serial;
    parallel.workers = 7;
    const auto a = run_experiment(serial);
    const auto b = run_experiment(parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].counts == b[i].counts);
        CHECK(a[i].mean == b[i].mean);
    }
}

TEST_CASE("experiment validation") {
    const Domain src = black_single_peaked(4);
    CHECK_THROWS_AS(run_experiment({src, 0, 1, {2}, 0, 1}), precondition_error);
    CHECK_THROWS_AS(run_experiment({src, 1, 0, {2}, 0, 1}), precondition_error);
    CHECK_THROWS_AS(run_experiment({src, 1, 1, {}, 0, 1}), precondition_error);
    CHECK_THROWS_AS(run_experiment({src, 1, 1, {1}, 0, 1}), precondition_error);
    CHECK_THROWS_AS(run_experiment({src, 1, 1, {5}, 0, 1}), precondition_error);
}
