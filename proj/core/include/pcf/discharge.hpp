#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/patterns.hpp"

namespace pcf {

/// Maximal path of 2-vertices between two 3+-vertices (a t-thread, t =
/// interior size). Interior vertices are thread-2-vertices of both endpoints.
struct Thread {
    Vertex a = 0, b = 0;           // 3+ endpoints, a <= b
    std::vector<Vertex> interior;  // in path order from a to b
};

struct ThreadDecomposition {
    std::vector<Thread> threads;
    std::map<Vertex, int> thread2_count;  // per 3+ vertex, its thread-2-vertices

    /// Threads incident to v (closed threads counted twice).
    std::vector<const Thread*> at(Vertex v) const;
};

/// Complete, disjoint decomposition. Throws std::invalid_argument for cycles
/// (no 3+ endpoints exist) and disconnected graphs.
ThreadDecomposition threads(const Graph& g);

/// Structural properties P1..P5, each the absence of its witnessing
/// configuration: P1 <- T1, P2 <- T8, P3 <- T5, P4 <- T11 and T12, P5 <- T36.
struct PropertyReport {
    std::array<bool, 5> holds{};                      // P1..P5
    std::array<std::optional<ConfigMatch>, 5> witness;  // violating match when false
    bool all() const;
};

PropertyReport check_properties(const Graph& g);

/// Per-vertex charge in exact fifths (numerator over a fixed denominator 5).
struct ChargeLedger {
    std::map<Vertex, long long> fifths;
    std::string phase;  // "initial" or "final"

    long long total() const;
};

/// Initial charge 5d(v)-12 fifths, then transfers: every 3-vertex sends 1/5,
/// every 4-vertex 2/5, every 5+-vertex 1/5 to each of its thread-2-vertices.
/// Conservation of the total is asserted. Throws on cycles.
std::pair<ChargeLedger, ChargeLedger> run_discharging(const Graph& g);

struct DischargeReport {
    bool is_cycle = false;           // classified outcome: rules do not apply
    long long sum_initial_fifths = 0;
    bool sum_at_most_minus_24 = false;  // total <= -24/5
    bool edge_bound_ok = false;         // 5|E| <= 6(|V|-2)
    bool conserved = false;             // skipped (false) only for cycles
    PropertyReport properties;
    std::optional<std::string> present_config;  // some Pi always fails; its config id
};

/// The contradiction argument, checkable: the initial total is negative by
/// the edge bound, the rules conserve charge, and were P1..P5 all to hold
/// every final charge would be nonnegative — so some configuration among
/// {T1,T5,T8,T11,T12,T36} must be present. Requires a PlanarGirth12
/// certificate.
DischargeReport verify_contradiction(const Graph& g, const ClassCertificate& cert);

}  // namespace pcf
