#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/patterns.hpp"

namespace pcf {

struct GenResult {
    Graph g;
    ClassCertificate cert;
};

/// Random connected K4-minor-free graph with max degree <= 4, by partial-
/// 2-tree growth (attach each new vertex to an edge or a single vertex,
/// retrying under the degree cap, stopping growth when stuck).
GenResult gen_k4mf(int n, std::uint64_t seed);

/// Random connected outer-1-planar graph: vertices 0..n-1 on the outer
/// cycle, non-crossing chords by recursive polygon splitting, plus crossing
/// chord pairs confined to one region each (each chord crosses only its
/// partner). degree_cap 0 means unrestricted.
GenResult gen_o1p(int n, std::uint64_t seed, int degree_cap = 0);

/// Random planar graph with girth >= 12: a small planar base (outer-1-planar
/// skeleton, or K4 when n_base = 4) with every edge subdivided
/// ceil(12/g0) - 1 times, g0 the base girth.
GenResult gen_girth12(int n_base, std::uint64_t seed);

Graph gen_cycle(int l);             // l >= 3
Graph gen_path(int l);              // l >= 1 vertices
Graph gen_subdivided_clique(int n); // 1-subdivision of K_n, n >= 2

/// Named instances: "C" (cycle), "P" (path), "SK" (1-subdivision of K_n).
Graph gen_named(const std::string& name, int param);

/// Delete v from the matched 5-cycle xuwyv (three interior 2-vertices) and
/// connect x,y if they were not adjacent. Expects an OP1 match.
Graph operation_i(const Graph& g, const ConfigMatch& m);

/// Replace the matched path xuvy (d(u)=d(v)=2, x != y) by x-w-y with a fresh
/// 2-vertex w. Expects an OP2 match.
Graph operation_ii(const Graph& g, const ConfigMatch& m);

/// How configurations in the reduced graph trace back through the two
/// operations: finding `target` after an operation means the original graph
/// contained one of the listed sources.
struct ReductionTableRow {
    std::string target;
    std::vector<std::string> op1_sources;
    std::vector<std::string> op2_sources;
};

const std::vector<ReductionTableRow>& reduction_table();

}  // namespace pcf
