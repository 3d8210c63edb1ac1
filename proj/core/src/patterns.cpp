#include "pcf/patterns.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace pcf {

namespace {

using HostEdge = std::pair<Vertex, Vertex>;

HostEdge host_edge(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

int incident_edge_count(const ConfigPattern& p, const std::string& role) {
    int n = 0;
    for (const auto& [a, b] : p.edges)
        if (a == role || b == role) ++n;
    return n;
}

bool pair_constraints_ok(const ConfigPattern& p, const Graph& g,
                         const std::map<std::string, Vertex>& asg) {
    for (const auto& pc : p.pair_constraints) {
        auto ia = asg.find(pc.a);
        auto ib = asg.find(pc.b);
        if (ia == asg.end() || ib == asg.end()) continue;
        if (ia->second != ib->second) continue;
        if (pc.kind == PairConstraint::MustDiffer) return false;
        if (!pc.pred_if_equal.ok(g.degree(ia->second))) return false;
    }
    return true;
}

struct Matcher {
    const Graph& g;
    const ConfigPattern& p;
    std::map<std::string, Vertex> asg;
    std::set<HostEdge> used_edges;
    std::vector<int> incident;  // per role index, total pattern edges at it

    Matcher(const Graph& graph, const ConfigPattern& pat) : g(graph), p(pat) {
        for (const auto& r : p.roles) incident.push_back(incident_edge_count(p, r.name));
    }

    bool candidate_ok(std::size_t ridx, Vertex v, std::vector<HostEdge>& added) {
        const PatternRole& r = p.roles[ridx];
        if (!r.pred.ok(g.degree(v))) return false;
        if (!r.solid && g.degree(v) < std::min(2, incident[ridx])) return false;
        for (std::size_t j = 0; j < ridx; ++j) {
            Vertex other = asg.at(p.roles[j].name);
            if (other == v && (r.solid || p.roles[j].solid)) return false;
        }
        // incident pattern edges whose other endpoint is already placed must
        // land on distinct, loop-free host edges
        for (const auto& [a, b] : p.edges) {
            const std::string* other = nullptr;
            if (a == r.name) other = &b;
            else if (b == r.name) other = &a;
            else continue;
            auto it = asg.find(*other);
            if (it == asg.end()) continue;
            if (it->second == v) return false;
            if (!g.has_edge(v, it->second)) return false;
            HostEdge e = host_edge(v, it->second);
            if (used_edges.count(e)) return false;
            used_edges.insert(e);
            added.push_back(e);
        }
        asg[r.name] = v;
        if (!pair_constraints_ok(p, g, asg)) {
            asg.erase(r.name);
            return false;
        }
        return true;
    }

    void unassign(std::size_t ridx, const std::vector<HostEdge>& added) {
        asg.erase(p.roles[ridx].name);
        for (const auto& e : added) used_edges.erase(e);
    }

    bool search(std::size_t ridx, const std::vector<Vertex>& all) {
        if (ridx == p.roles.size()) return true;
        // prefer neighbors of an already-placed adjacent role; ascending either way
        const std::set<Vertex>* nbrs = nullptr;
        for (const auto& [a, b] : p.edges) {
            if (a == p.roles[ridx].name && asg.count(b)) { nbrs = &g.neighbors(asg.at(b)); break; }
            if (b == p.roles[ridx].name && asg.count(a)) { nbrs = &g.neighbors(asg.at(a)); break; }
        }
        auto try_vertex = [&](Vertex v) {
            std::vector<HostEdge> added;
            if (!candidate_ok(ridx, v, added)) {
                for (const auto& e : added) used_edges.erase(e);
                return false;
            }
            if (search(ridx + 1, all)) return true;
            unassign(ridx, added);
            return false;
        };
        if (nbrs) {
            for (Vertex v : *nbrs)
                if (try_vertex(v)) return true;
        } else {
            for (Vertex v : all)
                if (try_vertex(v)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<ConfigMatch> find(const Graph& g, const std::string& id) {
    const ConfigPattern& p = pattern(id);
    Matcher m(g, p);
    if (!m.search(0, g.vertices())) return std::nullopt;
    return ConfigMatch{id, m.asg};
}

std::optional<ConfigMatch> find_any(const Graph& g, const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        auto m = find(g, id);
        if (m) return m;
    }
    return std::nullopt;
}

bool verify_match(const Graph& g, const ConfigMatch& m) {
    const ConfigPattern& p = pattern(m.pattern_id);
    if (m.assignment.size() != p.roles.size()) return false;
    for (std::size_t i = 0; i < p.roles.size(); ++i) {
        const PatternRole& r = p.roles[i];
        auto it = m.assignment.find(r.name);
        if (it == m.assignment.end()) return false;
        Vertex v = it->second;
        if (!g.has_vertex(v)) return false;
        if (!r.pred.ok(g.degree(v))) return false;
        if (!r.solid && g.degree(v) < std::min(2, incident_edge_count(p, r.name))) return false;
        for (const auto& other : p.roles) {
            if (other.name == r.name) continue;
            if (m.assignment.at(other.name) == v && (r.solid || other.solid)) return false;
        }
    }
    std::set<HostEdge> used;
    for (const auto& [a, b] : p.edges) {
        Vertex va = m.assignment.at(a), vb = m.assignment.at(b);
        if (va == vb || !g.has_edge(va, vb)) return false;
        if (!used.insert(host_edge(va, vb)).second) return false;
    }
    return pair_constraints_ok(p, g, m.assignment);
}

}  // namespace pcf
