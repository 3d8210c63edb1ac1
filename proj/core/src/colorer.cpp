#include "pcf/colorer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcf {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::K4mfDeg2: return "k4mf+2";
        case Strategy::O1pDeg2: return "o1p+2";
        case Strategy::Girth12Deg2: return "girth12+2";
        case Strategy::O1pDeg3: return "o1p+3";
        case Strategy::O1pUnif6: return "o1p-u6";
        case Strategy::Girth12Unif6: return "girth12-u6";
    }
    return "?";
}

const std::vector<std::string>& strategy_ids(Strategy s) {
    static const std::vector<std::string> k4mf = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 12; ++i) v.push_back("T" + std::to_string(i));
        return v;
    }();
    static const std::vector<std::string> o1p2 = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 35; ++i) v.push_back("T" + std::to_string(i));
        return v;
    }();
    static const std::vector<std::string> girth12 = {"T1", "T5", "T8", "T11", "T12", "T36"};
    static const std::vector<std::string> o1p3 = {"T1", "T3", "T14", "X1", "X2"};
    switch (s) {
        case Strategy::K4mfDeg2: return k4mf;
        case Strategy::O1pDeg2: return o1p2;
        case Strategy::Girth12Deg2:
        case Strategy::Girth12Unif6: return girth12;
        case Strategy::O1pDeg3:
        case Strategy::O1pUnif6: return o1p3;
    }
    return k4mf;
}

Strategy strategy_for(GraphClass c, int k) {
    if (c == GraphClass::K4MinorFree && k == 2) return Strategy::K4mfDeg2;
    if (c == GraphClass::Outer1Planar && k == 2) return Strategy::O1pDeg2;
    if (c == GraphClass::PlanarGirth12 && k == 2) return Strategy::Girth12Deg2;
    if (c == GraphClass::Outer1Planar && k == 3) return Strategy::O1pDeg3;
    if (c == GraphClass::Outer1Planar && k == 6) return Strategy::O1pUnif6;
    if (c == GraphClass::PlanarGirth12 && k == 6) return Strategy::Girth12Unif6;
    throw std::invalid_argument("no strategy for class " + to_string(c) + " with k=" + std::to_string(k));
}

namespace {

std::map<std::string, ReductionRule> build_rules() {
    std::map<std::string, ReductionRule> m;
    auto add = [&](const std::string& id, std::vector<std::string> del, std::string tag) {
        ReductionRule r;
        r.pattern_id = id;
        r.deletion_roles = std::move(del);
        for (const auto& role : pattern(id).roles) r.recolor_roles.push_back(role.name);
        r.lemma_tag = std::move(tag);
        m[id] = std::move(r);
    };
    add("T1", {"u"}, "T1");
    add("T2", {"u"}, "T2");
    add("T3", {"v"}, "T3");
    add("T4", {"v", "x"}, "T4");
    add("T5", {"u", "v"}, "T5");
    add("T6", {"u"}, "T6");
    add("T7", {"u", "v", "w"}, "T7");
    add("T8", {"u", "v", "w", "p"}, "T8");
    add("T9", {"u", "v", "p"}, "T9");
    add("T10", {"u", "v", "p", "q"}, "T10");
    add("T11", {"u", "v", "p", "q"}, "T11");
    add("T12", {"a", "u", "v", "p"}, "T12");
    add("T13", {"u"}, "T13");
    add("T14", {"v"}, "T14");
    add("T15", {"u", "w"}, "T15");
    add("T16", {"u", "t"}, "T16");
    add("T17", {"u", "w"}, "T17");
    add("T18", {"w", "u", "t"}, "T18");
    add("T19", {"w", "u", "t"}, "T19");
    add("T20", {"u", "v"}, "T20");
    add("T21", {"u", "v", "w"}, "T21");
    for (const char* id : {"T22", "T23", "T24"}) add(id, {"u"}, "F1");
    for (const char* id : {"T25", "T26", "T27"}) add(id, {"u", "v"}, "F2");
    for (const char* id : {"T28", "T29", "T30"}) add(id, {"u", "w", "v"}, "T28-30");
    for (const char* id : {"T31", "T32", "T33"}) add(id, {"u", "v"}, "F3");
    add("T34", {"u", "v", "w"}, "T34");
    add("T35", {"u", "v", "p", "q"}, "T35");
    add("T36", {"h", "u", "v", "p", "q", "l"}, "T36");
    add("X1", {"u"}, "X1");
    add("X2", {"u", "v"}, "X2");
    return m;
}

const std::map<std::string, ReductionRule>& rules() {
    static const auto m = build_rules();
    return m;
}

}  // namespace

bool has_reduction_rule(const std::string& pattern_id) { return rules().count(pattern_id) != 0; }

const ReductionRule& reduction_rule(const std::string& pattern_id) {
    auto it = rules().find(pattern_id);
    if (it == rules().end()) throw std::invalid_argument("no reduction rule for " + pattern_id);
    return it->second;
}

Coloring base_case(const Graph& g, const ListAssignment& lists, std::uint64_t budget) {
    SolveOutcome out = solve(g, lists, budget);
    if (out.status == SolveStatus::BudgetExhausted)
        throw std::runtime_error("base case: node budget exhausted on " +
                                 std::to_string(g.num_vertices()) + " vertices");
    if (out.status == SolveStatus::Unsat)
        throw ExtensionFailed("base case UNSAT on " + std::to_string(g.num_vertices()) +
                                  " vertices (not expected on certified inputs)",
                              ConfigMatch{}, Coloring{});
    return out.coloring;
}

namespace {

/// Local-search extension over a fixed set of variables: `vars` take colors
/// from their lists (recolored boundary vertices must actually change), all
/// other vertices keep `fixed`'s colors.
struct ExtendSearch {
    const Graph& g;
    const ListAssignment& lists;
    const Coloring& fixed;  // colors of everything outside the deletion set
    std::vector<Vertex> vars;
    std::set<Vertex> var_set;
    std::set<Vertex> must_change;  // recolored boundary vertices
    Coloring cand;

    std::optional<Color> color_of(Vertex v) const {
        if (var_set.count(v)) return cand.at(v);
        return fixed.at(v);
    }

    bool locally_pcf() const {
        // changed vertices and their neighbors are the only ones whose
        // neighborhood multiset moved; everything else stayed PCF
        std::set<Vertex> affected;
        for (Vertex v : vars) {
            affected.insert(v);
            for (Vertex u : g.neighbors(v)) affected.insert(u);
        }
        for (Vertex v : affected) {
            if (g.degree(v) == 0) continue;
            std::map<Color, int> count;
            for (Vertex u : g.neighbors(v)) ++count[*color_of(u)];
            bool unique = false;
            for (auto [c, n] : count)
                if (n == 1) { unique = true; break; }
            if (!unique) return false;
        }
        return true;
    }

    bool assign(std::size_t idx) {
        if (idx == vars.size()) return locally_pcf();
        Vertex v = vars[idx];
        for (Color c : lists.lists.at(v)) {
            if (must_change.count(v) && fixed.at(v) && *fixed.at(v) == c) continue;
            bool proper = true;
            for (Vertex u : g.neighbors(v)) {
                std::optional<Color> cu;
                if (var_set.count(u)) cu = cand.at(u);
                else cu = fixed.at(u);
                if (cu && *cu == c) { proper = false; break; }
            }
            if (!proper) continue;
            cand.set(v, c);
            if (assign(idx + 1)) return true;
            cand.colors.erase(v);
        }
        return false;
    }
};

std::set<Vertex> role_vertices(const ConfigMatch& m, const std::vector<std::string>& roles) {
    std::set<Vertex> out;
    for (const auto& r : roles) out.insert(m.at(r));
    return out;
}

}  // namespace

Coloring extend(const Graph& g, const Coloring& partial, const ConfigMatch& match,
                const ReductionRule& rule, const ListAssignment& lists) {
    std::set<Vertex> deleted = role_vertices(match, rule.deletion_roles);
    std::set<Vertex> recolorable = role_vertices(match, rule.recolor_roles);
    std::vector<Vertex> boundary;
    for (Vertex v : recolorable)
        if (!deleted.count(v)) boundary.push_back(v);

    // phase 1: subsets of size 0 (only the deleted vertices get colors);
    // phase 2: ascending numbers of boundary recolorings on top
    for (std::size_t s = 0; s <= boundary.size(); ++s) {
        // enumerate s-subsets of `boundary` in lexicographic index order
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ExtendSearch search{g, lists, partial};
            for (Vertex v : deleted) search.vars.push_back(v);
            for (std::size_t i : idx) {
                search.vars.push_back(boundary[i]);
                search.must_change.insert(boundary[i]);
            }
            std::sort(search.vars.begin(), search.vars.end());
            search.var_set = std::set<Vertex>(search.vars.begin(), search.vars.end());
            if (search.assign(0)) {
                Coloring full = partial;
                for (const auto& [v, c] : search.cand.colors) full.set(v, c);
                UniqueColorReport rep = is_pcf(g, full, &lists);
                if (rep.verdict) return full;
            }
            // next combination
            if (s == 0) break;
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == boundary.size() - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw ExtensionFailed("extension search exhausted for " + match.pattern_id, match, partial);
}

namespace {

struct ColorDriver {
    const ListAssignment& lists;
    const std::vector<std::string>& ids;
    int threshold;
    std::uint64_t budget;
    ReductionTrace trace;

    Coloring run(const Graph& g) {
        if (static_cast<int>(g.num_vertices()) <= threshold) {
            Coloring phi = base_case(g, lists, budget);
            TraceStep step;
            step.kind = TraceStep::Base;
            step.assigned = phi.colors;
            trace.steps.push_back(std::move(step));
            return phi;
        }
        auto m = find_any(g, ids);
        if (!m)
            throw NoConfigFound("no catalog configuration on " + std::to_string(g.num_vertices()) +
                                " vertices (priority list of " + std::to_string(ids.size()) +
                                " ids exhausted)");
        const ReductionRule& rule = reduction_rule(m->pattern_id);
        std::set<Vertex> deleted = role_vertices(*m, rule.deletion_roles);
        Graph rest = g.without(deleted);
        Coloring partial;
        for (const auto& comp : rest.components()) {
            std::set<Vertex> others;
            for (Vertex v : rest.vertices())
                if (!std::binary_search(comp.begin(), comp.end(), v)) others.insert(v);
            Coloring sub = run(rest.without(others));
            for (const auto& [v, c] : sub.colors) partial.set(v, c);
        }
        Coloring full = extend(g, partial, *m, rule, lists);
        TraceStep step;
        step.kind = TraceStep::Reduce;
        step.match = *m;
        step.deleted = std::vector<Vertex>(deleted.begin(), deleted.end());
        for (const auto& [v, c] : full.colors) {
            auto before = partial.at(v);
            if (!before || *before != c) step.assigned[v] = c;
        }
        trace.steps.push_back(std::move(step));
        return full;
    }
};

}  // namespace

ColorResult color(const Graph& g, const ListAssignment& lists, Strategy s, int threshold,
                  std::uint64_t budget) {
    if (!lists.covers(g)) throw std::invalid_argument("list assignment does not cover the graph");
    ColorDriver driver{lists, strategy_ids(s), threshold, budget, {}};
    Coloring phi;
    for (const auto& comp : g.components()) {
        std::set<Vertex> others;
        for (Vertex v : g.vertices())
            if (!std::binary_search(comp.begin(), comp.end(), v)) others.insert(v);
        Coloring sub = driver.run(g.without(others));
        for (const auto& [v, c] : sub.colors) phi.set(v, c);
    }
    return {phi, std::move(driver.trace)};
}

Coloring replay(const Graph&, const ReductionTrace& trace) {
    Coloring phi;
    for (const auto& step : trace.steps)
        for (const auto& [v, c] : step.assigned) phi.set(v, c);
    return phi;
}

}  // namespace pcf
