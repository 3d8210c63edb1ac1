#include <functional>
#include <random>

#include "doctest.h"
#include "pcf/gen.hpp"
#include "pcf/solver.hpp"

using namespace pcf;

namespace {

// independent oracle: enumerate every total coloring from the lists
bool naive_sat(const Graph& g, const ListAssignment& L) {
    std::vector<Vertex> vs = g.vertices();
    Coloring phi;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == vs.size()) return is_pcf(g, phi, &L).verdict;
        for (Color c : L.lists.at(vs[i])) {
            phi.set(vs[i], c);
            if (rec(i + 1)) return true;
        }
        phi.colors.erase(vs[i]);
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("solve on the sharp cycle instances") {
    Graph c5 = gen_cycle(5);
    CHECK(solve(c5, uniform_lists(c5, 4)).status == SolveStatus::Unsat);
    SolveOutcome sat = solve(c5, uniform_lists(c5, 5));
    REQUIRE(sat.status == SolveStatus::Sat);
    CHECK(is_pcf(c5, sat.coloring, nullptr).verdict);

    Graph c7 = gen_cycle(7);
    CHECK(solve(c7, uniform_lists(c7, 3)).status == SolveStatus::Unsat);
}

TEST_CASE("chi_pcf values") {
    CHECK(chi_pcf(gen_cycle(5)) == 5);
    CHECK(chi_pcf(gen_cycle(6)) == 3);
    CHECK(chi_pcf(gen_subdivided_clique(4)) == 4);
    CHECK(chi_pcf(gen_path(1)) == 1);
    Graph empty;
    CHECK(chi_pcf(empty) == 0);
}

TEST_CASE("solver agrees with naive enumeration at small scale") {
    std::vector<Graph> corpus;
    for (int l = 3; l <= 7; ++l) corpus.push_back(gen_cycle(l));
    corpus.push_back(gen_path(5));
    corpus.push_back(gen_subdivided_clique(3));
    for (std::uint64_t seed = 0; seed < 5; ++seed) corpus.push_back(gen_k4mf(8, seed).g);
    for (const Graph& g : corpus)
        for (int k = 2; k <= 4; ++k) {
            ListAssignment L = uniform_lists(g, k);
            bool fast = solve(g, L).status == SolveStatus::Sat;
            CHECK(fast == naive_sat(g, L));
        }
}

TEST_CASE("solver monotone under list growth and deterministic") {
    Graph g = gen_o1p(9, 2).g;
    ListAssignment L = degree_plus_k(g, 2, g.max_degree() + 4, 5);
    SolveOutcome a = solve(g, L);
    REQUIRE(a.status == SolveStatus::Sat);
    SolveOutcome b = solve(g, L);
    CHECK(a.coloring.colors == b.coloring.colors);  // identical witness

    ListAssignment bigger = L;
    for (auto& [v, s] : bigger.lists) s.insert(99);
    CHECK(solve(g, bigger).status == SolveStatus::Sat);
}

TEST_CASE("budget exhaustion is distinct from UNSAT") {
    Graph g = gen_cycle(12);
    SolveOutcome out = solve(g, uniform_lists(g, 2), 5);
    CHECK(out.status == SolveStatus::BudgetExhausted);
}

TEST_CASE("refute_choosability") {
    Graph c5 = gen_cycle(5);
    RefutationOutcome out = refute_choosability(c5, 2, 4);
    REQUIRE(out.bad_lists.has_value());
    for (Vertex v : c5.vertices()) CHECK(out.bad_lists->lists.at(v) == std::set<Color>{1, 2, 3, 4});
    CHECK(solve(c5, *out.bad_lists).status == SolveStatus::Unsat);

    Graph k2;
    k2.add_edge(0, 1);
    RefutationOutcome none = refute_choosability(k2, 1, 4);
    CHECK(!none.bad_lists);
    CHECK(none.exhausted_universe);

    RefutationOutcome c3 = refute_choosability(gen_cycle(3), 1, 6);
    CHECK(!c3.bad_lists);
}
