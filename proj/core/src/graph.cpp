#include "pcf/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pcf {

void Graph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) throw std::invalid_argument("no such edge");
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    return it->second;
}

std::vector<Vertex> Graph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [v, nbrs] : adj_)
        for (Vertex w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [_, nbrs] : adj_) d = std::max<int>(d, nbrs.size());
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& [_, nbrs] : adj_) d = std::min<int>(d, nbrs.size());
    return d;
}

std::optional<int> Graph::girth() const {
    // BFS from every vertex; the shortest cycle through the BFS root is found
    // via the first non-tree edges, and every root on a shortest cycle reports
    // the exact girth.
    int best = std::numeric_limits<int>::max();
    for (const auto& [s, _] : adj_) {
        std::map<Vertex, int> dist;
        std::map<Vertex, Vertex> parent;
        std::deque<Vertex> q{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            if (2 * dist[u] >= best) break;
            for (Vertex w : neighbors(u)) {
                auto it = dist.find(w);
                if (it == dist.end()) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + it->second + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

Graph Graph::without(const std::set<Vertex>& drop) const {
    for (Vertex v : drop)
        if (!has_vertex(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    Graph out;
    for (const auto& [v, nbrs] : adj_) {
        if (drop.count(v)) continue;
        out.add_vertex(v);
        for (Vertex w : nbrs)
            if (v < w && !drop.count(w)) out.add_edge(v, w);
    }
    return out;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::set<Vertex> seen;
    for (const auto& [s, _] : adj_) {
        if (seen.count(s)) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> q{s};
        seen.insert(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (Vertex w : neighbors(u))
                if (seen.insert(w).second) q.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const { return components().size() <= 1; }

bool Graph::is_cycle() const {
    if (adj_.size() < 3 || !connected()) return false;
    for (const auto& [_, nbrs] : adj_)
        if (nbrs.size() != 2) return false;
    return true;
}

Vertex Graph::next_id() const { return adj_.empty() ? 0 : adj_.rbegin()->first + 1; }

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::K4MinorFree: return "k4mf";
        case GraphClass::Outer1Planar: return "o1p";
        case GraphClass::PlanarGirth12: return "girth12";
        case GraphClass::Unrestricted: return "unrestricted";
    }
    return "?";
}

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult res;
    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);
    while (!adj.empty()) {
        Vertex best = adj.begin()->first;
        for (const auto& [v, nbrs] : adj)
            if (nbrs.size() < adj[best].size()) best = v;
        res.degeneracy = std::max<int>(res.degeneracy, adj[best].size());
        res.elimination_order.push_back(best);
        for (Vertex w : adj[best]) adj[w].erase(best);
        adj.erase(best);
    }
    return res;
}

namespace {

// Multigraph scratch space for the series-parallel reduction.
struct MultiGraph {
    std::map<Vertex, std::map<Vertex, int>> adj;  // neighbor -> multiplicity
    std::map<Vertex, int> loops;

    int degree(Vertex v) const {
        int d = 2 * (loops.count(v) ? loops.at(v) : 0);
        for (const auto& [_, m] : adj.at(v)) d += m;
        return d;
    }
};

}  // namespace

bool is_k4_minor_free(const Graph& g) {
    MultiGraph m;
    for (Vertex v : g.vertices()) m.adj[v];
    for (auto [u, v] : g.edges()) {
        m.adj[u][v] = 1;
        m.adj[v][u] = 1;
    }
    bool changed = true;
    while (changed && !m.adj.empty()) {
        changed = false;
        for (auto it = m.adj.begin(); it != m.adj.end();) {
            Vertex v = it->first;
            m.loops.erase(v);  // loops never help a K4 minor
            for (auto& [_, mult] : it->second) mult = std::min(mult, 1);
            int d = 0;
            for (const auto& [_, mult] : it->second) d += mult;
            if (d <= 1) {
                for (const auto& [w, _] : it->second) m.adj[w].erase(v);
                it = m.adj.erase(it);
                changed = true;
            } else if (d == 2) {
                auto nit = it->second.begin();
                Vertex a = nit->first;
                Vertex b = std::next(nit)->first;
                m.adj[a].erase(v);
                m.adj[b].erase(v);
                m.adj[a][b] += 1;
                m.adj[b][a] += 1;
                it = m.adj.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return m.adj.empty();
}

ClassCertificate k4mf_certificate(const Graph& g) {
    if (!is_k4_minor_free(g)) throw std::invalid_argument("graph has a K4 minor");
    ClassCertificate cert;
    cert.tag = GraphClass::K4MinorFree;
    cert.trace = "series-parallel reduction succeeded";
    return cert;
}

}  // namespace pcf
