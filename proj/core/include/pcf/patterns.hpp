#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

/// Degree requirement a role places on its host vertex, always measured in
/// the host graph.
struct DegreePred {
    enum Kind { Any, Exact, NotEqual, AtMost } kind = Any;
    int value = 0;

    bool ok(int degree) const {
        switch (kind) {
            case Any: return true;
            case Exact: return degree == value;
            case NotEqual: return degree != value;
            case AtMost: return degree <= value;
        }
        return false;
    }
};

struct PatternRole {
    std::string name;
    DegreePred pred;
    /// Solid roles map to vertices distinct from every other role's vertex;
    /// hollow roles may coincide with other hollow roles.
    bool solid = true;
};

/// Extra condition on a pair of hollow roles.
struct PairConstraint {
    enum Kind {
        MustDiffer,          // the two roles may never coincide
        DegreeIfEqual,       // coincidence allowed only if the predicate holds
    } kind = MustDiffer;
    std::string a, b;
    DegreePred pred_if_equal;
};

/// Declarative degree-constrained subgraph pattern; one record per catalog id.
struct ConfigPattern {
    std::string id;
    std::vector<PatternRole> roles;
    std::vector<std::pair<std::string, std::string>> edges;  // over role names
    std::vector<PairConstraint> pair_constraints;

    const PatternRole& role(const std::string& name) const;
    bool has_role(const std::string& name) const;
};

/// Injective-modulo-hollow witness of a pattern in a host graph.
struct ConfigMatch {
    std::string pattern_id;
    std::map<std::string, Vertex> assignment;  // role name -> host vertex

    Vertex at(const std::string& role) const { return assignment.at(role); }
};

/// Catalog lookup. Ids: T1..T36, H1..H5, F1..F3, X1, X2, OP1, OP2.
/// Throws std::invalid_argument for unknown ids.
const ConfigPattern& pattern(const std::string& id);
const std::vector<std::string>& pattern_ids();

/// First embedding under lexicographic role assignment (roles in declaration
/// order, candidate vertices ascending), or nullopt.
std::optional<ConfigMatch> find(const Graph& g, const std::string& id);

/// First id in the given order with a match.
std::optional<ConfigMatch> find_any(const Graph& g, const std::vector<std::string>& ids);

/// Re-checks every pattern constraint for an externally supplied match.
bool verify_match(const Graph& g, const ConfigMatch& m);

}  // namespace pcf
