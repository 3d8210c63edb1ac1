#pragma once

#include <cstdint>
#include <optional>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class SolveStatus { Sat, Unsat, BudgetExhausted };

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    Coloring coloring;       // witness when Sat
    std::uint64_t nodes = 0; // search nodes expanded
};

/// Exhaustive backtracking search for a PCF coloring respecting the lists.
/// Deterministic: vertices in smallest-list-first order (id tie-break),
/// colors ascending. Unsat means the whole space was exhausted.
SolveOutcome solve(const Graph& g, const ListAssignment& lists, std::uint64_t budget = kDefaultBudget);

/// Smallest k such that the graph is PCF k-colorable (1 for edgeless graphs).
/// Throws std::runtime_error on budget exhaustion.
int chi_pcf(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct RefutationOutcome {
    std::optional<ListAssignment> bad_lists;  // an assignment with no PCF coloring
    bool exhausted_universe = false;          // searched every canonical assignment in the cap
    std::uint64_t assignments_tried = 0;
};

/// Searches canonical (degree+k) list assignments over {1..universe} for one
/// with no PCF coloring. Colors are introduced in first-use order, so each
/// assignment is tried once up to renaming.
RefutationOutcome refute_choosability(const Graph& g, int k, int universe,
                                      std::uint64_t budget = kDefaultBudget);

}  // namespace pcf
