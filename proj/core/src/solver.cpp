#include "pcf/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pcf {

namespace {

struct SearchState {
    const Graph& g;
    const ListAssignment& lists;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<Vertex> order;
    std::map<Vertex, int> uncolored_neighbors;
    Coloring phi;
    bool out_of_budget = false;

    explicit SearchState(const Graph& graph, const ListAssignment& l, std::uint64_t b)
        : g(graph), lists(l), budget(b) {
        order = g.vertices();
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b2) {
            return lists.lists.at(a).size() < lists.lists.at(b2).size();
        });
        for (Vertex v : order) uncolored_neighbors[v] = g.degree(v);
    }

    // PCF feasibility is decidable for a vertex exactly when its whole
    // neighborhood is colored; check at that moment and prune.
    bool neighborhood_ok(Vertex v) {
        std::map<Color, int> count;
        for (Vertex u : g.neighbors(v)) ++count[*phi.at(u)];
        for (auto [c, n] : count)
            if (n == 1) return true;
        return g.degree(v) == 0;
    }

    bool assign(std::size_t idx) {
        if (idx == order.size()) return true;
        Vertex v = order[idx];
        for (Color c : lists.lists.at(v)) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            bool proper = true;
            for (Vertex u : g.neighbors(v)) {
                auto cu = phi.at(u);
                if (cu && *cu == c) {
                    proper = false;
                    break;
                }
            }
            if (!proper) continue;
            phi.set(v, c);
            for (Vertex u : g.neighbors(v)) --uncolored_neighbors[u];
            bool feasible = true;
            for (Vertex u : g.neighbors(v))
                if (uncolored_neighbors[u] == 0 && !neighborhood_ok(u)) {
                    feasible = false;
                    break;
                }
            if (feasible && uncolored_neighbors[v] == 0 && !neighborhood_ok(v)) feasible = false;
            if (feasible && assign(idx + 1)) return true;
            for (Vertex u : g.neighbors(v)) ++uncolored_neighbors[u];
            phi.colors.erase(v);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SolveOutcome solve(const Graph& g, const ListAssignment& lists, std::uint64_t budget) {
    if (!lists.covers(g)) throw std::invalid_argument("list assignment does not cover the graph");
    SearchState st(g, lists, budget);
    SolveOutcome out;
    bool sat = st.assign(0);
    out.nodes = st.nodes;
    if (sat) {
        out.status = SolveStatus::Sat;
        out.coloring = st.phi;
    } else {
        out.status = st.out_of_budget ? SolveStatus::BudgetExhausted : SolveStatus::Unsat;
    }
    return out;
}

int chi_pcf(const Graph& g, std::uint64_t budget) {
    if (g.num_vertices() == 0) return 0;
    if (g.num_edges() == 0) return 1;
    for (int k = 1;; ++k) {
        SolveOutcome out = solve(g, uniform_lists(g, k), budget);
        if (out.status == SolveStatus::Sat) return k;
        if (out.status == SolveStatus::BudgetExhausted)
            throw std::runtime_error("chi_pcf: node budget exhausted at k=" + std::to_string(k));
    }
}

namespace {

struct RefuteState {
    const Graph& g;
    int k;
    int universe;
    std::uint64_t budget;
    std::uint64_t spent = 0;
    std::vector<Vertex> verts;
    ListAssignment current;
    RefutationOutcome result;

    RefuteState(const Graph& graph, int kk, int uni, std::uint64_t b)
        : g(graph), k(kk), universe(uni), budget(b), verts(graph.vertices()) {}

    // Enumerate canonical assignments: processing vertices in id order, any
    // color above the running maximum must extend it contiguously.
    bool enumerate(std::size_t idx, int max_used) {
        if (idx == verts.size()) {
            ++result.assignments_tried;
            std::uint64_t remaining = budget > spent ? budget - spent : 1;
            SolveOutcome out = solve(g, current, remaining);
            spent += out.nodes;
            if (out.status == SolveStatus::BudgetExhausted)
                throw std::runtime_error("refute_choosability: node budget exhausted");
            if (out.status == SolveStatus::Unsat) {
                result.bad_lists = current;
                return true;
            }
            return false;
        }
        Vertex v = verts[idx];
        int size = g.degree(v) + k;
        int cap = std::min(universe, max_used + size);
        std::vector<Color> subset;
        return pick(idx, max_used, size, 1, cap, subset);
    }

    bool pick(std::size_t idx, int max_used, int size, Color from, int cap, std::vector<Color>& subset) {
        if (static_cast<int>(subset.size()) == size) {
            // canonical: new colors must be exactly max_used+1 .. max_used+t
            int expect = max_used + 1;
            for (Color c : subset)
                if (c > max_used) {
                    if (c != expect) return false;
                    ++expect;
                }
            current.lists[verts[idx]] = std::set<Color>(subset.begin(), subset.end());
            bool done = enumerate(idx + 1, std::max(max_used, expect - 1));
            current.lists.erase(verts[idx]);
            return done;
        }
        for (Color c = from; c <= cap; ++c) {
            subset.push_back(c);
            if (pick(idx, max_used, size, c + 1, cap, subset)) return true;
            subset.pop_back();
        }
        return false;
    }
};

}  // namespace

RefutationOutcome refute_choosability(const Graph& g, int k, int universe, std::uint64_t budget) {
    if (universe < g.max_degree() + k)
        throw std::invalid_argument("color universe smaller than the largest list");
    RefuteState st(g, k, universe, budget);
    bool found = st.enumerate(0, 0);
    st.result.exhausted_universe = !found;
    return st.result;
}

}  // namespace pcf
