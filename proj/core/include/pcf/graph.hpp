#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

using Vertex = int;

/// Simple undirected graph with stable, opaque integer vertex ids.
/// Deleting vertices never renumbers the survivors.
class Graph {
public:
    Graph() = default;

    void add_vertex(Vertex v);
    /// Inserts both endpoints if absent. Throws on loops; duplicate edges are rejected.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(Vertex u, Vertex v) const;

    int degree(Vertex v) const;
    const std::set<Vertex>& neighbors(Vertex v) const;

    std::vector<Vertex> vertices() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted
    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return edge_count_; }
    int max_degree() const;
    int min_degree() const;

    /// Length of a shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

    /// Induced subgraph on V minus drop; ids of survivors are unchanged.
    Graph without(const std::set<Vertex>& drop) const;

    std::vector<std::vector<Vertex>> components() const;  // each sorted, ordered by min id
    bool connected() const;
    bool is_cycle() const;  // connected and 2-regular
    /// Largest id present plus one (0 for the empty graph); handy for fresh ids.
    Vertex next_id() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::map<Vertex, std::set<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

enum class GraphClass { K4MinorFree, Outer1Planar, PlanarGirth12, Unrestricted };

std::string to_string(GraphClass c);

/// Evidence that a graph belongs to a class. Only recognizers and generators
/// attach certificates; callers never assert one themselves.
struct ClassCertificate {
    GraphClass tag = GraphClass::Unrestricted;
    /// Outer-1-planar embeddings: vertices in outer-cycle order plus chord
    /// pairs that cross each other (and nothing else).
    std::vector<Vertex> cyclic_order;
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> crossing_pairs;
    /// PlanarGirth12 certificates: subdivisions applied to every base edge.
    int subdivisions_per_edge = 0;
    std::string trace;
};

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<Vertex> elimination_order;
};

/// Smallest d such that repeatedly removing a minimum-degree vertex never
/// exceeds d; the removal order is returned as a witness.
DegeneracyResult degeneracy(const Graph& g);

/// Exact test via series-parallel reduction per biconnected block:
/// strip degree-<=1 vertices, suppress degree-2 vertices, drop the parallel
/// edges and loops that appear. K4-minor-free iff everything reduces away.
bool is_k4_minor_free(const Graph& g);
ClassCertificate k4mf_certificate(const Graph& g);  // throws if the test fails

}  // namespace pcf
