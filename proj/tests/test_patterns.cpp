#include "doctest.h"
#include "pcf/gen.hpp"
#include "pcf/patterns.hpp"

using namespace pcf;

TEST_CASE("catalog is complete and well-formed") {
    CHECK(pattern_ids().size() == 48);  // T1-36, H1-5, F1-3, X1-2, OP1-2
    for (const auto& id : pattern_ids()) {
        const ConfigPattern& p = pattern(id);
        CHECK(p.id == id);
        CHECK(!p.roles.empty());
        for (const auto& [a, b] : p.edges) {
            CHECK(p.has_role(a));
            CHECK(p.has_role(b));
            CHECK(a != b);
        }
    }
    CHECK_THROWS(pattern("T99"));
}

TEST_CASE("find on small hosts") {
    Graph c6 = gen_cycle(6);
    auto m = find(c6, "T8");
    REQUIRE(m.has_value());
    CHECK(verify_match(c6, *m));
    CHECK(m->at("x") != m->at("y"));  // both endpoints are 2-vertices, so x=y is barred

    Graph k4;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(!find(k4, "T1"));

    Graph star;
    for (Vertex leaf = 1; leaf <= 3; ++leaf) star.add_edge(0, leaf);
    auto leaf = find(star, "T1");
    REQUIRE(leaf.has_value());
    CHECK(star.degree(leaf->at("u")) == 1);
}

TEST_CASE("find_any priority order on C6") {
    Graph c6 = gen_cycle(6);
    std::vector<std::string> ids;
    for (int i = 1; i <= 12; ++i) ids.push_back("T" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) CHECK(!find(c6, "T" + std::to_string(i)));
    auto m = find_any(c6, ids);
    REQUIRE(m.has_value());
    CHECK(m->pattern_id == "T8");

    Graph k2;
    k2.add_edge(0, 1);
    auto t1 = find_any(k2, ids);
    REQUIRE(t1.has_value());
    CHECK(t1->pattern_id == "T1");
}

TEST_CASE("T8 coincidence guard requires a non-2-vertex") {
    // no T8 on C5: the trail endpoints would have to coincide at a 2-vertex
    CHECK(!find(gen_cycle(5), "T8"));
    // 5-cycle with a pendant at vertex 0: endpoints may coincide at the
    // 3-vertex, so the trail wraps around
    Graph g = gen_cycle(5);
    g.add_edge(0, 5);
    auto m = find(g, "T8");
    REQUIRE(m.has_value());
    CHECK(m->at("x") == m->at("y"));
    CHECK(g.degree(m->at("x")) == 3);
    CHECK(verify_match(g, *m));
}

TEST_CASE("verify_match rejects tampered maps") {
    // triangle uvw with d(u)=2, d(v)=3, w arbitrary (here 3 as well)
    Graph g;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    auto m = find(g, "T2");
    REQUIRE(m.has_value());
    CHECK(verify_match(g, *m));

    ConfigMatch bad = *m;
    bad.assignment["v"] = 3;  // d(3) = 1, violates d(v) = 3 and the edges
    CHECK(!verify_match(g, bad));

    ConfigMatch off = *m;
    off.assignment["u"] = off.assignment["v"];  // solid coincidence
    CHECK(!verify_match(g, off));
}

TEST_CASE("hollow roles may be permuted when symmetric") {
    Graph c4 = gen_cycle(4);
    auto m = find(c4, "T3");
    REQUIRE(m.has_value());
    ConfigMatch swapped = *m;
    std::swap(swapped.assignment["x"], swapped.assignment["y"]);
    CHECK(verify_match(c4, swapped));
}

TEST_CASE("round trip on generated instances") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_k4mf(12, seed).g;
        for (const auto& id : pattern_ids()) {
            auto m = find(g, id);
            if (m) CHECK(verify_match(g, *m));
        }
    }
}

TEST_CASE("matching is deterministic") {
    Graph g = gen_o1p(14, 9).g;
    for (const auto& id : {"T1", "T3", "T5", "OP2"}) {
        auto a = find(g, id);
        auto b = find(g, id);
        CHECK((a.has_value() == b.has_value()));
        if (a) CHECK(a->assignment == b->assignment);
    }
}
