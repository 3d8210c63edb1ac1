#include "pcf/patterns.hpp"

#include <stdexcept>

namespace pcf {

namespace {

DegreePred exact(int k) { return {DegreePred::Exact, k}; }
DegreePred not3() { return {DegreePred::NotEqual, 3}; }
DegreePred at_most(int k) { return {DegreePred::AtMost, k}; }
DegreePred any() { return {}; }

struct Builder {
    ConfigPattern p;
    Builder(std::string id) { p.id = std::move(id); }
    Builder& solid(const std::string& name, DegreePred d) {
        p.roles.push_back({name, d, true});
        return *this;
    }
    Builder& hollow(const std::string& name, DegreePred d = any()) {
        p.roles.push_back({name, d, false});
        return *this;
    }
    // edge spec "ab" with single-letter role names
    Builder& path(const std::string& names) {
        for (std::size_t i = 0; i + 1 < names.size(); ++i)
            p.edges.emplace_back(std::string(1, names[i]), std::string(1, names[i + 1]));
        return *this;
    }
    Builder& cycle(const std::string& names) {
        path(names);
        p.edges.emplace_back(std::string(1, names.back()), std::string(1, names.front()));
        return *this;
    }
    Builder& edge(const std::string& a, const std::string& b) {
        p.edges.emplace_back(a, b);
        return *this;
    }
    Builder& distinct(const std::string& a, const std::string& b) {
        p.pair_constraints.push_back({PairConstraint::MustDiffer, a, b, {}});
        return *this;
    }
    Builder& degree_if_equal(const std::string& a, const std::string& b, DegreePred d) {
        p.pair_constraints.push_back({PairConstraint::DegreeIfEqual, a, b, d});
        return *this;
    }
};

std::vector<ConfigPattern> build_catalog() {
    std::vector<ConfigPattern> out;
    auto add = [&](Builder& b) { out.push_back(b.p); };

    // --- T1..T36: the unavailable-configuration catalog. Roles with an exact
    // degree are drawn solid (pairwise distinct); anchors without one are
    // hollow and may coincide unless that would collapse pattern edges.
    { Builder b("T1"); b.solid("u", exact(1)); add(b); }
    { Builder b("T2"); b.solid("u", exact(2)).solid("v", exact(3)).hollow("w").cycle("uvw"); add(b); }
    { Builder b("T3"); b.solid("u", exact(2)).solid("v", exact(2)).hollow("x").hollow("y").cycle("xuyv"); add(b); }
    { Builder b("T4");
      b.solid("u", exact(4)).solid("v", exact(2)).solid("x", exact(2)).hollow("w").hollow("y")
       .cycle("uvw").cycle("uxy");
      add(b); }
    { Builder b("T5"); b.solid("w", exact(3)).solid("v", exact(2)).solid("u", exact(2)).path("uvw"); add(b); }
    { Builder b("T6"); b.solid("u", exact(2)).solid("v", exact(2)).hollow("x", not3()).cycle("uvx"); add(b); }
    { Builder b("T7");
      b.solid("u", exact(2)).solid("v", exact(2)).solid("w", exact(2)).hollow("x", not3()).cycle("uvwx");
      add(b); }
    { Builder b("T8");
      b.solid("u", exact(2)).solid("v", exact(2)).solid("w", exact(2)).solid("p", exact(2))
       .hollow("x").hollow("y").path("xuvwpy")
       .degree_if_equal("x", "y", {DegreePred::NotEqual, 2});
      add(b); }
    { Builder b("T9");
      b.solid("w", exact(4)).solid("p", exact(2)).solid("v", exact(2)).solid("u", exact(2)).hollow("y")
       .cycle("ypw").path("wvu");
      add(b); }
    { Builder b("T10");
      b.solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2)).solid("p", exact(2))
       .solid("q", exact(2)).hollow("x").cycle("uvwx").path("wpq");
      add(b); }
    { Builder b("T11");
      b.solid("w", exact(4)).solid("x", exact(2)).solid("u", exact(2)).solid("v", exact(2))
       .solid("p", exact(2)).solid("q", exact(2)).path("xuvwpq");
      add(b); }
    { Builder b("T12");
      b.solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2)).solid("p", exact(2))
       .solid("a", exact(2)).path("uvwp").edge("w", "a");
      add(b); }
    { Builder b("T13");
      b.solid("x", exact(4)).solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2)).hollow("y")
       .cycle("xuw").cycle("xwvy");
      add(b); }
    { Builder b("T14");
      b.solid("u", exact(3)).solid("v", exact(3)).hollow("x").hollow("y")
       .path("xuvy").edge("u", "y").edge("x", "v");
      add(b); }
    { Builder b("T15");
      b.solid("u", exact(3)).solid("v", exact(3)).solid("w", exact(2)).hollow("x").hollow("y")
       .path("xwuvy").edge("u", "y").edge("x", "v");
      add(b); }
    { Builder b("T16");
      b.solid("u", exact(3)).solid("v", exact(3)).solid("t", exact(2)).hollow("x").hollow("y")
       .path("xutvy").edge("u", "y").edge("x", "v");
      add(b); }
    { Builder b("T17");
      b.solid("u", exact(3)).solid("v", exact(3)).solid("w", exact(2)).solid("z", exact(2))
       .hollow("x").hollow("y").path("xwuvzy").edge("u", "y").edge("x", "v");
      add(b); }
    { Builder b("T18");
      b.solid("u", exact(3)).solid("v", exact(3)).solid("w", exact(2)).solid("t", exact(2))
       .hollow("x").hollow("y").path("xwutvy").edge("u", "y").edge("x", "v");
      add(b); }
    { Builder b("T19");
      b.solid("u", exact(3)).solid("v", exact(3)).solid("w", exact(2)).solid("t", exact(2))
       .solid("z", exact(2)).hollow("x").hollow("y").path("xwutvzy").edge("u", "y").edge("x", "v");
      add(b); }
    { Builder b("T20");
      b.solid("x", exact(4)).solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("p", exact(2)).hollow("y").cycle("xuvw").cycle("xwpy");
      add(b); }
    { Builder b("T21");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("w", exact(2)).solid("p", exact(2)).hollow("q").cycle("xuvwy").cycle("xypq");
      add(b); }
    { Builder b("T22");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).hollow("h").hollow("p")
       .cycle("uxy").path("xhy").path("xpy");
      add(b); }
    { Builder b("T23");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).hollow("p").hollow("h")
       .cycle("xuy").cycle("yph").edge("x", "h");
      add(b); }
    { Builder b("T24");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("z", exact(2))
       .solid("h", exact(3)).hollow("p").cycle("xuy").cycle("ypzh").edge("x", "h");
      add(b); }
    { Builder b("T25");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .hollow("h").hollow("p").cycle("xuvy").path("xhy").path("xpy");
      add(b); }
    { Builder b("T26");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .hollow("p").hollow("h").cycle("xuvy").cycle("yph").edge("x", "h");
      add(b); }
    { Builder b("T27");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("z", exact(2)).solid("h", exact(3)).hollow("p").cycle("xuvy").cycle("ypzh").edge("x", "h");
      add(b); }
    { Builder b("T28");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("w", exact(2))
       .solid("v", exact(2)).hollow("h").hollow("p").cycle("xuwvy").path("xhy").path("xpy");
      add(b); }
    { Builder b("T29");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("w", exact(2))
       .solid("v", exact(2)).hollow("p").hollow("q").cycle("xuwvy").cycle("ypq").edge("x", "q");
      add(b); }
    { Builder b("T30");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("w", exact(2))
       .solid("v", exact(2)).solid("z", exact(2)).solid("q", exact(3)).hollow("p")
       .cycle("xuwvy").cycle("ypzq").edge("x", "q");
      add(b); }
    { Builder b("T31");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("t", exact(2)).hollow("h").hollow("p").cycle("xuvyt").path("xhy").path("xpy");
      add(b); }
    { Builder b("T32");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("t", exact(2)).hollow("p").hollow("h").cycle("xuvyt").cycle("yph").edge("x", "h");
      add(b); }
    { Builder b("T33");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("t", exact(2)).solid("z", exact(2)).solid("h", exact(3)).hollow("p")
       .cycle("xuvyt").cycle("ypzh").edge("x", "h");
      add(b); }
    { Builder b("T34");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("w", exact(2)).solid("t", exact(2)).cycle("xuvwyt");
      add(b); }
    { Builder b("T35");
      b.solid("x", exact(4)).solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("p", exact(2)).solid("q", exact(2)).cycle("xuvwpq");
      add(b); }
    { Builder b("T36");
      b.solid("w", exact(5)).solid("h", exact(2)).solid("u", exact(2)).solid("v", exact(2))
       .solid("p", exact(2)).solid("q", exact(2)).solid("l", exact(2)).path("huvwpql");
      add(b); }

    // --- H1..H5: extension obstacles; hollow anchors are the outside
    // neighbors the lemmas reference.
    { Builder b("H1");
      b.solid("u", exact(2)).solid("v", exact(2)).solid("w", exact(2)).hollow("x").hollow("y")
       .path("xuvwy");
      add(b); }
    { Builder b("H2");
      b.solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2)).solid("p", exact(2))
       .hollow("x").hollow("y").hollow("a").hollow("b")
       .path("xuvwpy").edge("w", "a").edge("w", "b");
      add(b); }
    { Builder b("H3");
      b.solid("w", exact(4)).solid("u", exact(2)).solid("v", exact(2)).solid("p", exact(2))
       .solid("q", exact(2)).hollow("x").hollow("y").hollow("a").hollow("b")
       .path("xuvwpqy").edge("w", "a").edge("w", "b");
      add(b); }
    { Builder b("H4");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2))
       .hollow("h").hollow("l").hollow("p").hollow("q")
       .cycle("xuy").edge("x", "h").edge("x", "l").edge("y", "p").edge("y", "q");
      add(b); }
    { Builder b("H5");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("w", exact(2))
       .solid("v", exact(2)).hollow("h").hollow("l").hollow("p").hollow("q")
       .cycle("xuwvy").edge("x", "h").edge("x", "l").edge("y", "p").edge("y", "q");
      add(b); }

    // --- F1..F3: frequently occurring reducible configurations.
    { Builder b("F1");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).hollow("h")
       .cycle("xuy").path("xhy");
      add(b); }
    { Builder b("F2");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .hollow("h").cycle("xuvy").path("xhy");
      add(b); }
    { Builder b("F3");
      b.solid("x", exact(4)).solid("y", exact(4)).solid("u", exact(2)).solid("v", exact(2))
       .solid("t", exact(2)).hollow("h").cycle("xuvyt").path("xhy");
      add(b); }

    // --- X1, X2: the (degree+3) catalog additions.
    { Builder b("X1"); b.solid("u", exact(2)).hollow("v").hollow("w").cycle("uvw"); add(b); }
    { Builder b("X2"); b.solid("u", exact(2)).solid("v", at_most(3)).edge("u", "v"); add(b); }

    // --- OP1, OP2: the structural-induction operations' preconditions.
    { Builder b("OP1");
      b.solid("u", exact(2)).solid("w", exact(2)).solid("v", exact(2)).hollow("x").hollow("y")
       .cycle("xuwyv");
      add(b); }
    { Builder b("OP2");
      b.solid("u", exact(2)).solid("v", exact(2)).hollow("x").hollow("y")
       .path("xuvy").distinct("x", "y");
      add(b); }

    return out;
}

}  // namespace

const std::vector<std::string>& pattern_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 36; ++i) v.push_back("T" + std::to_string(i));
        for (int i = 1; i <= 5; ++i) v.push_back("H" + std::to_string(i));
        for (int i = 1; i <= 3; ++i) v.push_back("F" + std::to_string(i));
        v.push_back("X1");
        v.push_back("X2");
        v.push_back("OP1");
        v.push_back("OP2");
        return v;
    }();
    return ids;
}

const ConfigPattern& pattern(const std::string& id) {
    static const std::map<std::string, ConfigPattern> catalog = [] {
        std::map<std::string, ConfigPattern> m;
        for (auto& p : build_catalog()) m[p.id] = p;
        return m;
    }();
    auto it = catalog.find(id);
    if (it == catalog.end()) throw std::invalid_argument("unknown pattern id " + id);
    return it->second;
}

const PatternRole& ConfigPattern::role(const std::string& name) const {
    for (const auto& r : roles)
        if (r.name == name) return r;
    throw std::invalid_argument("unknown role " + name + " in " + id);
}

bool ConfigPattern::has_role(const std::string& name) const {
    for (const auto& r : roles)
        if (r.name == name) return true;
    return false;
}

}  // namespace pcf
