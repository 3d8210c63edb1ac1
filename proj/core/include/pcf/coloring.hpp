#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "pcf/graph.hpp"

namespace pcf {

using Color = int;

/// Per-vertex color menus. A (degree+k) assignment gives every vertex
/// exactly d(v)+k colors.
struct ListAssignment {
    std::map<Vertex, std::set<Color>> lists;

    bool covers(const Graph& g) const;
    bool is_degree_plus_k(const Graph& g, int k) const;
};

/// Vertex -> color map; may be partial while an extension is in flight.
struct Coloring {
    std::map<Vertex, Color> colors;

    bool is_total(const Graph& g) const;
    std::optional<Color> at(Vertex v) const;
    void set(Vertex v, Color c) { colors[v] = c; }
};

/// Colors appearing exactly once among v's neighbors. Throws if a neighbor
/// is uncolored.
std::set<Color> unique_colors(const Graph& g, const Coloring& phi, Vertex v);

struct UniqueColorReport {
    std::map<Vertex, std::set<Color>> unique;     // U_phi(v, g) per vertex
    bool proper = false;
    bool conflict_free = false;                   // every non-isolated v has U != {}
    bool respects_lists = true;                   // trivially true when no lists given
    bool verdict = false;
    std::optional<std::pair<Vertex, Vertex>> violating_edge;
    std::optional<Vertex> starved_vertex;         // first v with empty U
    std::optional<Vertex> off_list_vertex;
};

/// Full PCF verification: proper, conflict-free at every non-isolated vertex,
/// and on-list when an assignment is supplied. Refuses partial colorings.
UniqueColorReport is_pcf(const Graph& g, const Coloring& phi, const ListAssignment* lists = nullptr);

/// Fast verdict-only variant usable on partial colorings restricted to the
/// colored subdomain: checks properness among colored pairs, list membership,
/// and conflict-freeness only for vertices whose whole neighborhood is colored.
bool pcf_ok_partial(const Graph& g, const Coloring& phi, const ListAssignment* lists = nullptr);

/// The four-case recoloring-obstacle color for neighbor w of u, given a
/// unique color alpha of u. nullopt encodes NULL.
/// Requires: w in N(u), alpha in U_phi(u,g), all of N(u) colored.
std::optional<Color> tau(const Graph& g, const Coloring& phi, Vertex u, Vertex w, Color alpha);

/// Uniformly random (d(v)+k)-subsets of {1..universe}, reproducible from seed.
ListAssignment degree_plus_k(const Graph& g, int k, int universe, std::uint64_t seed);

/// Every list equal to {1..k}.
ListAssignment uniform_lists(const Graph& g, int k);

}  // namespace pcf
