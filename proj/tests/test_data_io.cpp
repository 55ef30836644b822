#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "prefdom/condorcet.hpp"
#include "prefdom/domain_io.hpp"
#include "prefdom/errors.hpp"
#include "prefdom/generators.hpp"
#include "prefdom/reports.hpp"
#include "prefdom/soc.hpp"
#include "support/random_domains.hpp"

using namespace prefdom;

namespace {

std::string fixture(const std::string& name) { return std::string(PREFDOM_TEST_DATA_DIR) + "/" + name; }

Profile load_soc(const std::string& name) {
    std::ifstream in(fixture(name));
    REQUIRE(in);
    return parse_soc(in);
}

}  // namespace

TEST_CASE("modern soc files parse to profiles") {
    const Profile p = load_soc("sample_modern.soc");
    CHECK(p.num_alternatives() == 3);
    CHECK(p.num_agents() == 3);
    REQUIRE(p.census().size() == 2);
    CHECK(p.census()[0].count == 1);
    CHECK(p.census()[0].order.ranking() == std::vector<int>{1, 2, 3});
    CHECK(p.census()[1].count == 2);
    CHECK(p.census()[1].order.ranking() == std::vector<int>{3, 2, 1});
}

TEST_CASE("legacy soc files parse to the same profile") {
    CHECK(load_soc("sample_legacy.soc") == load_soc("sample_modern.soc"));
}

TEST_CASE("soc document metadata") {
    std::ifstream in(fixture("sample_modern.soc"));
    const SocDocument doc = parse_soc_document(in);
    CHECK(doc.num_alternatives == 3);
    CHECK(doc.declared_voters == 3);
    REQUIRE(doc.names.size() == 3);
    CHECK(doc.names[0] == "Algebra");
    CHECK(doc.names[2] == "Chemistry");
}

TEST_CASE("ties are rejected with the offending line") {
    std::ifstream in(fixture("ties.soc"));
    REQUIRE(in);
    CHECK_THROWS_WITH_AS(parse_soc(in), doctest::Contains("line 3"), parse_error);
}

TEST_CASE("incomplete rankings are rejected") {
    std::ifstream in(fixture("incomplete.soc"));
    REQUIRE(in);
    CHECK_THROWS_AS(parse_soc(in), parse_error);
}

TEST_CASE("census count mismatches are data errors") {
    std::ifstream in(fixture("count_mismatch.soc"));
    REQUIRE(in);
    CHECK_THROWS_AS(parse_soc(in), data_error);
}

TEST_CASE("metadata order and blank lines do not matter") {
    std::istringstream in("\n# NUMBER VOTERS: 2\n\n# NUMBER ALTERNATIVES: 2\n1: 1,2\n\n1: 2,1\n");
    const Profile p = parse_soc(in);
    CHECK(p.num_agents() == 2);
    CHECK(p.num_alternatives() == 2);
}

TEST_CASE("agh-shaped analysis helpers") {
    const Profile p = load_soc("agh_like.soc");
    CHECK(universally_top_alternative(p) == 2);
    // non-ample while course 2 is present, ample afterwards
    CHECK_FALSE(is_abundant(support(p), 2, 2));
    std::vector<int> rest;
    for (int x = 1; x <= 5; ++x)
        if (x != 2) rest.push_back(x);
    const Profile dropped = restrict_profile(p, AlternativeSet(rest));
    CHECK(is_abundant(support(dropped), 2, 2));

    const auto popular = alternatives_by_popularity(p);
    CHECK(popular.front() == 2);  // the mandatory course is the most popular
    CHECK(popular.size() == 5);

    const Profile no_top = restrict_profile(p, AlternativeSet({1, 3, 4, 5}));
    CHECK_FALSE(universally_top_alternative(no_top).has_value());
}

TEST_CASE("domain files round-trip") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 20; ++trial) {
        const Domain d = testsupport::random_domain(2 + static_cast<int>(rng() % 6), 12, rng);
        std::stringstream buffer(domain_to_text(d));
        CHECK(read_domain(buffer) == d);
    }
}

TEST_CASE("figure fixtures load") {
    const Domain fig2 = read_domain_file(std::string(PREFDOM_DATA_DIR) + "/fig2.domain");
    CHECK(fig2.size() == 4);
    CHECK(fig2.num_alternatives() == 8);
    const Domain fig3 = read_domain_file(std::string(PREFDOM_DATA_DIR) + "/fig3.domain");
    CHECK(fig3.size() == 4);
    CHECK(fig3.num_alternatives() == 6);
}

TEST_CASE("domain text format variants") {
    std::istringstream digits("# comment\n132\n213\n");
    const Domain d = read_domain(digits);
    CHECK(d.num_alternatives() == 3);
    CHECK(d.size() == 2);

    std::istringstream header_only("n=4\n");
    CHECK(read_domain(header_only).empty());

    std::istringstream commas("n=3\n1,3,2\n");
    CHECK(read_domain(commas).order(0).ranking() == std::vector<int>{1, 3, 2});
}

TEST_CASE("domain parse errors carry line numbers") {
    std::istringstream bad("n=3\n1 2 3\n1 2\n");
    CHECK_THROWS_WITH_AS(read_domain(bad), doctest::Contains("line 3"), parse_error);
    std::istringstream dup("n=3\n1 2 2\n");
    CHECK_THROWS_AS(read_domain(dup), parse_error);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_domain(empty), parse_error);
    CHECK_THROWS_AS(read_domain_file("/nonexistent/path.domain"), data_error);
}

TEST_CASE("non-range alternative sets survive the round trip") {
    const Domain d(AlternativeSet({2, 5, 7}),
                   {LinearOrder({5, 2, 7}), LinearOrder({7, 5, 2})});
    std::stringstream buffer(domain_to_text(d));
    CHECK(read_domain(buffer) == d);
}

TEST_CASE("profile JSON round-trips") {
    const Profile p = load_soc("agh_like.soc");
    std::istringstream in(to_json(p));
    CHECK(profile_from_json(in) == p);

    std::istringstream broken("{\"n\": 3}");
    CHECK_THROWS_AS(profile_from_json(broken), parse_error);
}
