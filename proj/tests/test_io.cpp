#include <string>

#include "doctest.h"
#include "pcf/gen.hpp"
#include "pcf/io.hpp"

using namespace pcf;

namespace {

std::string fail_message(const std::string& text) {
    try {
        parse_edge_list_string(text, "in.txt");
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("edge list round trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_o1p(10 + seed % 8, seed).g;
        Graph back = parse_edge_list_string(emit_edge_list(g));
        CHECK(back == g);
    }
    // isolated vertices survive the round trip via the header count
    Graph iso;
    iso.add_vertex(0);
    iso.add_vertex(1);
    iso.add_edge(2, 3);
    CHECK(parse_edge_list_string(emit_edge_list(iso)).num_vertices() == 4);
}

TEST_CASE("parser accepts comments and blank lines") {
    Graph g = parse_edge_list_string("c hello\n\np 3 2\nc mid\ne 0 1\ne 1 2\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("parser diagnostics name the offending line") {
    CHECK(fail_message("p 3 1\ne 0 0\n") == "in.txt:2: loop rejected");
    CHECK(fail_message("p 3 2\ne 0 1\ne 1 0\n") == "in.txt:3: duplicate edge rejected");
    CHECK(fail_message("p 3 1\ne 0 7\n") == "in.txt:2: vertex id out of range");
    CHECK(fail_message("e 0 1\n") == "in.txt:1: edge before header");
    CHECK(fail_message("c only comments\n") == "in.txt:1: missing `p <n> <m>` header");
    CHECK(fail_message("p 3 2\ne 0 1\n") ==
          "in.txt:2: edge count mismatch: header says 2, found 1");
    CHECK(fail_message("p 2 0\np 2 0\n") == "in.txt:2: duplicate header");
    CHECK(fail_message("p 3 1\nq 0 1\n") == "in.txt:2: unknown line tag `q`");
    CHECK(fail_message("p x y\n") == "in.txt:1: bad header, expected `p <n> <m>`");
}

TEST_CASE("list assignment JSON round trip") {
    ListAssignment L;
    L.lists[0] = {1, 2, 3};
    L.lists[7] = {4};
    ListAssignment back = lists_from_json(lists_to_json(L));
    CHECK(back.lists == L.lists);
    CHECK_THROWS(lists_from_json("{\"wrong\": {}}"));
}

TEST_CASE("coloring JSON round trip") {
    Coloring phi;
    phi.set(0, 3);
    phi.set(12, 1);
    Coloring back = coloring_from_json(coloring_to_json(phi));
    CHECK(back.colors == phi.colors);
    CHECK_THROWS(coloring_from_json("not json"));
}

TEST_CASE("certificate serialization carries class fields") {
    GenResult o1p = gen_o1p(10, 3);
    std::string j = certificate_to_json(o1p.cert);
    CHECK(j.find("cyclic_order") != std::string::npos);

    GenResult g12 = gen_girth12(4, 3);
    CHECK(certificate_to_json(g12.cert).find("subdivisions_per_edge") != std::string::npos);
}
