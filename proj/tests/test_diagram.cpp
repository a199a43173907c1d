#include "brouwer/diagram.hpp"

#include "doctest.h"

using namespace brouwer;

namespace {
Diagram D(const char* s) { return parse_diagram(s); }
}

TEST_CASE("parse and format") {
    auto d = D("r=2; cyc=1- 2- 2+ 1+");
    CHECK(d.r == 2);
    REQUIRE(d.size() == 4);
    CHECK(d.cyc[0] == Endpoint{Sign::Minus, 1});
    CHECK(d.cyc[2] == Endpoint{Sign::Plus, 2});
    CHECK(format_diagram(d) == "r=2; cyc=1- 2- 2+ 1+");
    CHECK(D("r=1; cyc=1- 1+").size() == 2);
}

TEST_CASE("parse rejects bad words") {
    CHECK_THROWS_AS(D("r=2; cyc=1- 1- 2+ 2+"), Error);
    CHECK_THROWS_AS(D("r=2; cyc=1- 2- 2+"), Error);
    CHECK_THROWS_AS(D("r=2; cyc=1- 3- 3+ 1+"), Error);
    CHECK_THROWS_AS(D("cyc=1- 1+"), Error);
    CHECK_THROWS_AS(D("r=1; cyc=1* 1+"), Error);
}

TEST_CASE("canonical form") {
    CHECK(format_cyc(canonical_form(D("r=2; cyc=2- 2+ 1- 1+"))) == "1- 1+ 2- 2+");
    CHECK(format_cyc(canonical_form(D("r=2; cyc=1- 2- 2+ 1+"))) == "1- 2- 2+ 1+");
    // rotation of the same word
    CHECK(canonical_form(D("r=3; cyc=2+ 3- 1+ 2- 3+ 1-")) == canonical_form(D("r=3; cyc=1- 2+ 3- 1+ 2- 3+")));
}

TEST_CASE("canonical form is idempotent and invariant under maps") {
    // every word at r <= 3 up to relabeling: orbit 1..r placed in all orders
    std::vector<Endpoint> ends;
    for (int o = 1; o <= 3; ++o) ends.push_back({Sign::Minus, o}), ends.push_back({Sign::Plus, o});
    std::sort(ends.begin(), ends.end());
    int n = 0;
    do {
        Diagram d{3, ends};
        Diagram c = canonical_form(d);
        CHECK(canonical_form(c) == c);
        for (auto& m : canonical_maps(d)) CHECK(apply_map(d, m) == c);
        ++n;
    } while (std::next_permutation(ends.begin(), ends.end()));
    CHECK(n == 720);
}

TEST_CASE("adjacency profile") {
    auto p = adjacency_profile(D("r=2; cyc=1- 2- 2+ 1+"));
    CHECK(p.blocks.size() == 2);
    CHECK(p.r_prime == 1);
    CHECK(p.blocks[0].orbits == std::vector<int>{1, 2});
    CHECK(p.blocks[1].orbits == std::vector<int>{2, 1});
    CHECK(adjacency_profile(D("r=2; cyc=1- 1+ 2- 2+")).r_prime == 2);
    auto q = adjacency_profile(D("r=3; cyc=1- 2+ 3- 1+ 2- 3+"));
    CHECK(q.blocks.size() == 6);
    CHECK(q.r_prime == 3);
}

TEST_CASE("crossings") {
    CHECK(crossings(D("r=2; cyc=1- 2- 1+ 2+")) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(crossings(D("r=2; cyc=1- 2- 2+ 1+")).empty());
    CHECK(crossings(D("r=2; cyc=1- 1+ 2- 2+")).empty());
}

TEST_CASE("normalize removes crossings inside blocks") {
    // 1+ 2+ is one block, reordering it untangles the pair
    CHECK(crossings(normalize(D("r=2; cyc=1- 2- 1+ 2+"))).empty());
    // 1- 2+ 2- 1+: no two ends of one sign are adjacent, nothing to reorder
    auto d = normalize(D("r=2; cyc=1- 2+ 2- 1+"));
    CHECK(d == canonical_form(D("r=2; cyc=1- 2+ 2- 1+")));
    CHECK(normalize(d) == d);
}
