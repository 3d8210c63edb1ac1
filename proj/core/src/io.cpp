#include "pcf/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pcf {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& why) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& name) {
    Graph g;
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1, seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;    // comment
        if (tag == "p") {
            if (n >= 0) parse_fail(name, lineno, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(name, lineno, "bad header, expected `p <n> <m>`");
            for (Vertex v = 0; v < n; ++v) g.add_vertex(v);
            continue;
        }
        if (tag == "e") {
            if (n < 0) parse_fail(name, lineno, "edge before header");
            long long u, v;
            if (!(ls >> u >> v)) parse_fail(name, lineno, "bad edge line, expected `e <u> <v>`");
            if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(name, lineno, "vertex id out of range");
            if (u == v) parse_fail(name, lineno, "loop rejected");
            if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                parse_fail(name, lineno, "duplicate edge rejected");
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            ++seen;
            continue;
        }
        parse_fail(name, lineno, "unknown line tag `" + tag + "`");
    }
    if (n < 0) parse_fail(name, lineno, "missing `p <n> <m>` header");
    if (seen != m) parse_fail(name, lineno, "edge count mismatch: header says " + std::to_string(m) +
                                                ", found " + std::to_string(seen));
    return g;
}

Graph parse_edge_list_string(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return parse_edge_list(in, name);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    // ids may be sparse after deletions; the header covers the id range so
    // round-trips keep original ids
    Vertex max_id = -1;
    for (Vertex v : g.vertices()) max_id = std::max(max_id, v);
    out << "p " << (max_id + 1) << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

ListAssignment lists_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ListAssignment out;
    for (auto& [key, val] : j.at("lists").items()) {
        std::set<Color>& s = out.lists[std::stoi(key)];
        for (auto& c : val) s.insert(c.get<Color>());
    }
    return out;
}

std::string lists_to_json(const ListAssignment& lists) {
    nlohmann::json j;
    j["lists"] = nlohmann::json::object();
    for (const auto& [v, s] : lists.lists)
        j["lists"][std::to_string(v)] = std::vector<Color>(s.begin(), s.end());
    return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Coloring out;
    for (auto& [key, val] : j.at("colors").items()) out.set(std::stoi(key), val.get<Color>());
    return out;
}

std::string coloring_to_json(const Coloring& phi) {
    nlohmann::json j;
    j["colors"] = nlohmann::json::object();
    for (const auto& [v, c] : phi.colors) j["colors"][std::to_string(v)] = c;
    return j.dump();
}

std::string certificate_to_json(const ClassCertificate& cert) {
    nlohmann::json j;
    j["class"] = to_string(cert.tag);
    j["trace"] = cert.trace;
    if (!cert.cyclic_order.empty()) j["cyclic_order"] = cert.cyclic_order;
    if (!cert.crossing_pairs.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& [e1, e2] : cert.crossing_pairs)
            arr.push_back({{e1.first, e1.second}, {e2.first, e2.second}});
        j["crossing_pairs"] = arr;
    }
    if (cert.tag == GraphClass::PlanarGirth12) j["subdivisions_per_edge"] = cert.subdivisions_per_edge;
    return j.dump();
}

std::string trace_to_json(const ReductionTrace& trace) {
    auto steps = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json js;
        js["kind"] = s.kind == TraceStep::Base ? "base" : "reduce";
        if (s.kind == TraceStep::Reduce) {
            js["pattern"] = s.match.pattern_id;
            js["roles"] = nlohmann::json::object();
            for (const auto& [r, v] : s.match.assignment) js["roles"][r] = v;
            js["deleted"] = s.deleted;
        }
        js["assigned"] = nlohmann::json::object();
        for (const auto& [v, c] : s.assigned) js["assigned"][std::to_string(v)] = c;
        steps.push_back(std::move(js));
    }
    nlohmann::json j;
    j["steps"] = std::move(steps);
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace pcf
