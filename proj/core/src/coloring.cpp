#include "pcf/coloring.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace pcf {

bool ListAssignment::covers(const Graph& g) const {
    for (Vertex v : g.vertices())
        if (!lists.count(v) || lists.at(v).empty()) return false;
    return true;
}

bool ListAssignment::is_degree_plus_k(const Graph& g, int k) const {
    for (Vertex v : g.vertices()) {
        auto it = lists.find(v);
        if (it == lists.end() || static_cast<int>(it->second.size()) != g.degree(v) + k) return false;
    }
    return true;
}

bool Coloring::is_total(const Graph& g) const {
    for (Vertex v : g.vertices())
        if (!colors.count(v)) return false;
    return true;
}

std::optional<Color> Coloring::at(Vertex v) const {
    auto it = colors.find(v);
    if (it == colors.end()) return std::nullopt;
    return it->second;
}

std::set<Color> unique_colors(const Graph& g, const Coloring& phi, Vertex v) {
    std::map<Color, int> count;
    for (Vertex u : g.neighbors(v)) {
        auto c = phi.at(u);
        if (!c) throw std::invalid_argument("uncolored neighbor " + std::to_string(u));
        ++count[*c];
    }
    std::set<Color> out;
    for (auto [c, n] : count)
        if (n == 1) out.insert(c);
    return out;
}

UniqueColorReport is_pcf(const Graph& g, const Coloring& phi, const ListAssignment* lists) {
    if (!phi.is_total(g)) throw std::invalid_argument("is_pcf requires a total coloring");
    UniqueColorReport rep;
    rep.proper = true;
    rep.conflict_free = true;
    for (auto [u, v] : g.edges()) {
        if (*phi.at(u) == *phi.at(v) && rep.proper) {
            rep.proper = false;
            rep.violating_edge = {u, v};
        }
    }
    for (Vertex v : g.vertices()) {
        rep.unique[v] = unique_colors(g, phi, v);
        if (g.degree(v) > 0 && rep.unique[v].empty() && rep.conflict_free) {
            rep.conflict_free = false;
            rep.starved_vertex = v;
        }
    }
    if (lists) {
        for (Vertex v : g.vertices()) {
            auto it = lists->lists.find(v);
            if (it == lists->lists.end() || !it->second.count(*phi.at(v))) {
                rep.respects_lists = false;
                rep.off_list_vertex = v;
                break;
            }
        }
    }
    rep.verdict = rep.proper && rep.conflict_free && rep.respects_lists;
    return rep;
}

bool pcf_ok_partial(const Graph& g, const Coloring& phi, const ListAssignment* lists) {
    for (const auto& [v, c] : phi.colors) {
        if (lists) {
            auto it = lists->lists.find(v);
            if (it == lists->lists.end() || !it->second.count(c)) return false;
        }
        for (Vertex w : g.neighbors(v)) {
            auto cw = phi.at(w);
            if (cw && *cw == c && w > v) return false;
        }
    }
    for (Vertex v : g.vertices()) {
        if (g.degree(v) == 0) continue;
        std::map<Color, int> count;
        bool complete = true;
        for (Vertex u : g.neighbors(v)) {
            auto c = phi.at(u);
            if (!c) {
                complete = false;
                break;
            }
            ++count[*c];
        }
        if (!complete) continue;
        bool has_unique = std::any_of(count.begin(), count.end(), [](auto& kv) { return kv.second == 1; });
        if (!has_unique) return false;
    }
    return true;
}

std::optional<Color> tau(const Graph& g, const Coloring& phi, Vertex u, Vertex w, Color alpha) {
    if (!g.neighbors(u).count(w)) throw std::invalid_argument("w is not a neighbor of u");
    std::set<Color> uniq = unique_colors(g, phi, u);
    if (!uniq.count(alpha)) throw std::invalid_argument("alpha is not a unique color of u");
    Color cw = *phi.at(w);
    if (uniq.size() == 1) {
        if (cw == alpha) {
            // gamma_w: the color shared by all neighbors of u other than w.
            // When the remaining neighbors are not monochromatic gamma_w is
            // undefined and we fall back to NULL.
            std::map<Color, int> count;
            for (Vertex x : g.neighbors(u))
                if (x != w) ++count[*phi.at(x)];
            if (count.size() != 1) return std::nullopt;
            return count.begin()->first;
        }
        return alpha;
    }
    if (uniq.size() == 2) {
        if (cw == alpha) {
            for (Color c : uniq)
                if (c != alpha) return c;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

ListAssignment degree_plus_k(const Graph& g, int k, int universe, std::uint64_t seed) {
    if (universe < g.max_degree() + k)
        throw std::invalid_argument("color universe smaller than the largest list");
    std::mt19937_64 rng(seed);
    ListAssignment out;
    for (Vertex v : g.vertices()) {
        int need = g.degree(v) + k;
        std::vector<Color> pool(universe);
        for (int i = 0; i < universe; ++i) pool[i] = i + 1;
        // Partial Fisher-Yates: the first `need` slots end up a uniform subset.
        for (int i = 0; i < need; ++i) {
            std::uniform_int_distribution<int> pick(i, universe - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        out.lists[v] = std::set<Color>(pool.begin(), pool.begin() + need);
    }
    return out;
}

ListAssignment uniform_lists(const Graph& g, int k) {
    ListAssignment out;
    std::set<Color> all;
    for (Color c = 1; c <= k; ++c) all.insert(c);
    for (Vertex v : g.vertices()) out.lists[v] = all;
    return out;
}

}  // namespace pcf
