#include <random>

#include "doctest.h"
#include "pcf/coloring.hpp"
#include "pcf/gen.hpp"

using namespace pcf;

namespace {

Coloring cyclic(const Graph& g, std::initializer_list<Color> around) {
    Coloring phi;
    Vertex v = 0;
    for (Color c : around) phi.set(v++, c);
    return phi;
}

}  // namespace

TEST_CASE("unique colors") {
    Graph star;
    for (Vertex leaf = 1; leaf <= 3; ++leaf) star.add_edge(0, leaf);
    Coloring phi;
    phi.set(0, 9);
    phi.set(1, 1);
    phi.set(2, 2);
    phi.set(3, 2);
    CHECK(unique_colors(star, phi, 0) == std::set<Color>{1});
    phi.set(3, 3);
    CHECK(unique_colors(star, phi, 0) == std::set<Color>{1, 2, 3});
    phi.colors.erase(3);
    CHECK_THROWS(unique_colors(star, phi, 0));
}

TEST_CASE("is_pcf verdicts") {
    Graph c6 = gen_cycle(6);
    CHECK(is_pcf(c6, cyclic(c6, {1, 2, 3, 1, 2, 3})).verdict);
    UniqueColorReport rep = is_pcf(c6, cyclic(c6, {1, 2, 1, 2, 1, 2}));
    CHECK(rep.proper);
    CHECK(!rep.conflict_free);
    CHECK(!rep.verdict);
    CHECK(rep.starved_vertex.has_value());

    UniqueColorReport improper = is_pcf(c6, cyclic(c6, {1, 1, 2, 3, 2, 3}));
    CHECK(!improper.proper);
    CHECK(improper.violating_edge == std::pair<Vertex, Vertex>{0, 1});

    Coloring partial = cyclic(c6, {1, 2, 3});
    CHECK_THROWS(is_pcf(c6, partial));
}

TEST_CASE("no proper 4-coloring of C5 is conflict-free") {
    Graph c5 = gen_cycle(5);
    int proper = 0;
    for (int code = 0; code < 4 * 4 * 4 * 4 * 4; ++code) {
        Coloring phi;
        int rest = code;
        for (Vertex v = 0; v < 5; ++v) {
            phi.set(v, rest % 4 + 1);
            rest /= 4;
        }
        UniqueColorReport rep = is_pcf(c5, phi);
        if (rep.proper) ++proper;
        CHECK(!rep.verdict);
    }
    CHECK(proper > 0);
}

TEST_CASE("list membership is enforced") {
    Graph k2;
    k2.add_edge(0, 1);
    Coloring phi;
    phi.set(0, 1);
    phi.set(1, 2);
    ListAssignment L;
    L.lists[0] = {1, 3};
    L.lists[1] = {1, 3};
    UniqueColorReport rep = is_pcf(k2, phi, &L);
    CHECK(!rep.verdict);
    CHECK(rep.off_list_vertex == 1);
}

TEST_CASE("tau four cases") {
    Graph star;
    for (Vertex leaf = 1; leaf <= 3; ++leaf) star.add_edge(0, leaf);
    Coloring phi;
    phi.set(0, 9);
    phi.set(1, 1);
    phi.set(2, 2);
    phi.set(3, 2);
    // U = {1}; w the 1-colored neighbor -> gamma_w, the common color of the rest
    CHECK(tau(star, phi, 0, 1, 1) == 2);
    // U = {1}; w a 2-colored neighbor -> alpha
    CHECK(tau(star, phi, 0, 2, 1) == 1);
    // |U| = 3 -> NULL
    phi.set(3, 3);
    CHECK(!tau(star, phi, 0, 1, 1));
    // |U| = 2, phi(w) = alpha -> the other element
    Graph star4;
    for (Vertex leaf = 1; leaf <= 4; ++leaf) star4.add_edge(0, leaf);
    Coloring psi;
    psi.set(0, 9);
    psi.set(1, 1);
    psi.set(2, 2);
    psi.set(3, 3);
    psi.set(4, 3);
    CHECK(tau(star4, psi, 0, 1, 1) == 2);
    CHECK(!tau(star4, psi, 0, 2, 1));  // phi(w) != alpha with |U| = 2
    CHECK_THROWS(tau(star4, psi, 0, 3, 3));  // alpha not unique
}

TEST_CASE("degree_plus_k assignments") {
    Graph c5 = gen_cycle(5);
    ListAssignment L = degree_plus_k(c5, 2, 4, 7);
    CHECK(L.is_degree_plus_k(c5, 2));
    for (Vertex v : c5.vertices()) CHECK(L.lists.at(v) == std::set<Color>{1, 2, 3, 4});

    Graph g = gen_o1p(9, 5).g;
    ListAssignment a = degree_plus_k(g, 3, 10, 42);
    ListAssignment b = degree_plus_k(g, 3, 10, 42);
    CHECK(a.lists == b.lists);
    CHECK(a.is_degree_plus_k(g, 3));
    CHECK_THROWS(degree_plus_k(g, 3, g.max_degree() + 2, 1));
}

TEST_CASE("pcf verdict is invariant under color renaming") {
    Graph g = gen_k4mf(9, 11).g;
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Coloring phi;
        for (Vertex v : g.vertices()) phi.set(v, static_cast<Color>(rng() % 5 + 1));
        bool before = is_pcf(g, phi).verdict;
        Coloring renamed;
        for (auto [v, c] : phi.colors) renamed.set(v, 17 - c);  // injective on 1..5
        CHECK(is_pcf(g, renamed).verdict == before);
    }
}

TEST_CASE("U shape at low degrees") {
    Graph p3 = gen_path(3);
    Coloring phi;
    phi.set(0, 1);
    phi.set(1, 2);
    phi.set(2, 1);
    CHECK(unique_colors(p3, phi, 0) == std::set<Color>{2});  // 1-vertex: singleton
    CHECK(unique_colors(p3, phi, 1).empty());                // both neighbors share 1
    phi.set(2, 3);
    CHECK(unique_colors(p3, phi, 1).size() == 2);
}
