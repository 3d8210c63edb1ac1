#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/patterns.hpp"
#include "pcf/solver.hpp"

namespace pcf {

/// Below this many vertices the recursion hands off to the exact solver.
inline constexpr int kBaseCaseThreshold = 12;

/// One strategy per (graph class, list regime) the colorer certifies.
enum class Strategy {
    K4mfDeg2,      // K4-minor-free, max degree 4, lists of size d(v)+2
    O1pDeg2,       // outer-1-planar, max degree 4, lists of size d(v)+2
    Girth12Deg2,   // planar girth >= 12, lists of size d(v)+2
    O1pDeg3,       // outer-1-planar, lists of size d(v)+3
    O1pUnif6,      // outer-1-planar, uniform 6-lists
    Girth12Unif6,  // planar girth >= 12, uniform 6-lists
};

std::string to_string(Strategy s);

/// Configuration priority list the strategy matches against, ascending index.
const std::vector<std::string>& strategy_ids(Strategy s);

/// Maps (class, k) as exposed on the command line to a strategy; k is 2, 3
/// or 6 (uniform lists). Throws std::invalid_argument on unsupported combos.
Strategy strategy_for(GraphClass c, int k);

/// How to reduce on one matched configuration: which role vertices get
/// deleted, and which may be recolored while extending.
struct ReductionRule {
    std::string pattern_id;
    std::vector<std::string> deletion_roles;
    std::vector<std::string> recolor_roles;  // deletion roles plus every named role
    std::string lemma_tag;
};

bool has_reduction_rule(const std::string& pattern_id);
const ReductionRule& reduction_rule(const std::string& pattern_id);  // throws on unknown

/// One recursion step. Replaying steps in order (writing `assigned` over the
/// running coloring) reconstructs the final coloring exactly.
struct TraceStep {
    enum Kind { Reduce, Base } kind = Base;
    ConfigMatch match;                  // Reduce steps only
    std::vector<Vertex> deleted;        // Reduce steps only, sorted
    std::map<Vertex, Color> assigned;   // every vertex (re)colored at this step
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
};

struct ColorResult {
    Coloring phi;
    ReductionTrace trace;
};

/// Fatal on certified inputs: the guaranteed local extension was not found.
/// Carries the failing match and the residual coloring for diagnosis.
struct ExtensionFailed : std::runtime_error {
    ConfigMatch match;
    Coloring partial;
    ExtensionFailed(const std::string& msg, ConfigMatch m, Coloring p)
        : std::runtime_error(msg), match(std::move(m)), partial(std::move(p)) {}
};

/// Fatal on certified inputs: no catalog configuration above the base-case
/// threshold.
struct NoConfigFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reduction-based constructive PCF list coloring. Finds a configuration from
/// the strategy's priority list, deletes its rule's vertices, recurses per
/// component, then extends by bounded local search. Output always passes
/// is_pcf against the lists.
ColorResult color(const Graph& g, const ListAssignment& lists, Strategy s,
                  int threshold = kBaseCaseThreshold, std::uint64_t budget = kDefaultBudget);

/// Extends a PCF coloring of g minus the rule's deletion set to all of g,
/// touching only the rule's recolor-allowed vertices. Phase 1 colors the
/// deleted vertices; phase 2 additionally recolors boundary roles, ascending
/// subset size. Throws ExtensionFailed after exhausting both phases.
Coloring extend(const Graph& g, const Coloring& partial, const ConfigMatch& match,
                const ReductionRule& rule, const ListAssignment& lists);

/// Exact-solver delegate for small graphs; UNSAT becomes ExtensionFailed.
Coloring base_case(const Graph& g, const ListAssignment& lists,
                   std::uint64_t budget = kDefaultBudget);

/// Applies the trace steps in order to an empty coloring.
Coloring replay(const Graph& g, const ReductionTrace& trace);

}  // namespace pcf
