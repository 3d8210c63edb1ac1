#include "pcf/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pcf {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

}  // namespace

GenResult gen_k4mf(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_k4mf: n must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g;
    g.add_vertex(0);
    if (n >= 2) g.add_edge(0, 1);
    for (Vertex next = 2; next < n; ++next) {
        bool placed = false;
        for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
            if (pick(rng, 0, 1) == 0) {
                // attach across an existing edge (partial-2-tree step)
                auto es = g.edges();
                auto [u, v] = es[pick(rng, 0, static_cast<int>(es.size()) - 1)];
                if (g.degree(u) < 4 && g.degree(v) < 4) {
                    g.add_edge(next, u);
                    g.add_edge(next, v);
                    placed = true;
                }
            } else {
                auto vs = g.vertices();
                Vertex u = vs[pick(rng, 0, static_cast<int>(vs.size()) - 1)];
                if (g.degree(u) < 4) {
                    g.add_edge(next, u);
                    placed = true;
                }
            }
        }
        if (!placed) break;  // degree-capped everywhere reachable; stop growth
    }
    if (!is_k4_minor_free(g) || g.max_degree() > 4)
        throw std::logic_error("gen_k4mf: construction failed re-verification");
    GenResult out;
    out.g = std::move(g);
    out.cert = k4mf_certificate(out.g);
    out.cert.trace = "partial-2-tree growth, degree cap 4, seed " + std::to_string(seed);
    return out;
}

namespace {

struct O1pBuilder {
    Graph& g;
    ClassCertificate& cert;
    std::mt19937_64& rng;
    int cap;  // 0 = unrestricted

    bool cap_ok(Vertex v, int extra) const {
        return cap == 0 || g.degree(v) + extra <= cap;
    }

    // region: boundary vertices in cyclic order; every consecutive pair
    // (including last-first) is already an edge
    void split(const std::vector<Vertex>& r) {
        int k = static_cast<int>(r.size());
        if (k < 4) return;
        int action = pick(rng, 0, 2);
        if (action == 0) return;
        if (action == 1) {
            // crossing pair on four consecutive boundary vertices; the two
            // chords cross each other and nothing else, then the region is
            // left alone so no later chord can cross them
            int i = pick(rng, 0, k - 4);
            Vertex a = r[i], b = r[i + 1], c = r[i + 2], d = r[i + 3];
            if (cap_ok(a, 1) && cap_ok(b, 1) && cap_ok(c, 1) && cap_ok(d, 1) &&
                !g.has_edge(a, c) && !g.has_edge(b, d)) {
                g.add_edge(a, c);
                g.add_edge(b, d);
                cert.crossing_pairs.push_back({{a, c}, {b, d}});
            }
            return;
        }
        // plain chord, then recurse into the two sub-regions
        int i = pick(rng, 0, k - 1);
        int off = pick(rng, 2, k - 2);
        int j = (i + off) % k;
        Vertex a = r[i], b = r[j];
        if (!cap_ok(a, 1) || !cap_ok(b, 1) || g.has_edge(a, b)) return;
        g.add_edge(a, b);
        std::vector<Vertex> left, right;
        for (int t = i; ; t = (t + 1) % k) {
            left.push_back(r[t]);
            if (t == j) break;
        }
        for (int t = j; ; t = (t + 1) % k) {
            right.push_back(r[t]);
            if (t == i) break;
        }
        split(left);
        split(right);
    }
};

}  // namespace

GenResult gen_o1p(int n, std::uint64_t seed, int degree_cap) {
    if (n < 1) throw std::invalid_argument("gen_o1p: n must be >= 1");
    std::mt19937_64 rng(seed);
    GenResult out;
    out.cert.tag = GraphClass::Outer1Planar;
    for (Vertex v = 0; v < n; ++v) {
        out.g.add_vertex(v);
        out.cert.cyclic_order.push_back(v);
    }
    if (n == 2) out.g.add_edge(0, 1);
    if (n >= 3) {
        for (Vertex v = 0; v < n; ++v) out.g.add_edge(v, (v + 1) % n);
        O1pBuilder b{out.g, out.cert, rng, degree_cap};
        b.split(out.cert.cyclic_order);
    }
    out.cert.trace = "outer cycle + split chords, seed " + std::to_string(seed);
    if (degree_cap && out.g.max_degree() > degree_cap)
        throw std::logic_error("gen_o1p: degree cap violated");
    return out;
}

namespace {

Graph subdivide_all(const Graph& base, int times) {
    Graph g;
    for (Vertex v : base.vertices()) g.add_vertex(v);
    Vertex fresh = base.next_id();
    for (auto [u, v] : base.edges()) {
        Vertex prev = u;
        for (int i = 0; i < times; ++i) {
            g.add_edge(prev, fresh);
            prev = fresh++;
        }
        g.add_edge(prev, v);
    }
    return g;
}

}  // namespace

GenResult gen_girth12(int n_base, std::uint64_t seed) {
    if (n_base < 3) throw std::invalid_argument("gen_girth12: n_base must be >= 3");
    std::mt19937_64 rng(seed);
    Graph base;
    std::string base_desc;
    if (n_base == 4 && pick(rng, 0, 1) == 0) {
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) base.add_edge(u, v);
        base_desc = "K4";
    } else {
        base = gen_o1p(n_base, rng()).g;  // outer-1-planar graphs are planar
        base_desc = "o1p skeleton n=" + std::to_string(n_base);
    }
    int g0 = *base.girth();
    int times = (12 + g0 - 1) / g0 - 1;  // subdividing multiplies girth by times+1
    GenResult out;
    out.g = subdivide_all(base, times);
    if (!out.g.girth() || *out.g.girth() < 12)
        throw std::logic_error("gen_girth12: girth re-verification failed");
    out.cert.tag = GraphClass::PlanarGirth12;
    out.cert.subdivisions_per_edge = times;
    out.cert.trace = base_desc + ", seed " + std::to_string(seed);
    return out;
}

Graph gen_cycle(int l) {
    if (l < 3) throw std::invalid_argument("gen_cycle: length must be >= 3");
    Graph g;
    for (Vertex v = 0; v < l; ++v) g.add_edge(v, (v + 1) % l);
    return g;
}

Graph gen_path(int l) {
    if (l < 1) throw std::invalid_argument("gen_path: need at least one vertex");
    Graph g;
    g.add_vertex(0);
    for (Vertex v = 1; v < l; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph gen_subdivided_clique(int n) {
    if (n < 2) throw std::invalid_argument("gen_subdivided_clique: n must be >= 2");
    Graph g;
    Vertex mid = n;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, mid);
            g.add_edge(mid, v);
            ++mid;
        }
    return g;
}

Graph gen_named(const std::string& name, int param) {
    if (name == "C") return gen_cycle(param);
    if (name == "P") return gen_path(param);
    if (name == "SK") return gen_subdivided_clique(param);
    throw std::invalid_argument("gen_named: unknown family " + name);
}

Graph operation_i(const Graph& g, const ConfigMatch& m) {
    if (m.pattern_id != "OP1" || !verify_match(g, m))
        throw std::invalid_argument("operation_i: not a valid OP1 match");
    Graph out = g.without({m.at("v")});
    if (!out.has_edge(m.at("x"), m.at("y"))) out.add_edge(m.at("x"), m.at("y"));
    return out;
}

Graph operation_ii(const Graph& g, const ConfigMatch& m) {
    if (m.pattern_id != "OP2" || !verify_match(g, m))
        throw std::invalid_argument("operation_ii: not a valid OP2 match");
    Vertex w = g.next_id();
    Graph out = g.without({m.at("u"), m.at("v")});
    out.add_edge(m.at("x"), w);
    out.add_edge(w, m.at("y"));
    return out;
}

const std::vector<ReductionTableRow>& reduction_table() {
    static const std::vector<ReductionTableRow> table = {
        {"T1", {}, {}},
        {"T2", {}, {"T5"}},
        {"T4", {}, {"T9"}},
        {"T5", {}, {}},
        {"T6", {}, {"T7"}},
        {"T7", {}, {"T8"}},
        {"T8", {}, {}},
        {"T9", {}, {"T10"}},
        {"T10", {"T12"}, {"T11"}},
        {"T11", {}, {}},
        {"T12", {}, {}},
        {"T13", {}, {"T9", "T20"}},
        {"T14", {}, {}},
        {"T15", {}, {"T5"}},
        {"T16", {}, {"T5"}},
        {"T17", {}, {"T5"}},
        {"T18", {}, {"T5"}},
        {"T19", {}, {"T5"}},
        {"T20", {"T12"}, {"T10", "T21"}},
        {"T21", {}, {"T8", "T11"}},
        {"T22", {}, {"T25"}},
        {"T23", {}, {"T26"}},
        {"T24", {}, {"T5", "T27"}},
        {"T25", {"T31"}, {"T28"}},
        {"T26", {"T32"}, {"T29"}},
        {"T27", {"T33"}, {"T5", "T30"}},
        {"T28", {}, {"T8"}},
        {"T29", {}, {"T8"}},
        {"T30", {}, {"T5", "T8"}},
        {"T31", {}, {"T34", "T35"}},
        {"T32", {}, {"T34", "T35"}},
        {"T33", {}, {"T5", "T34", "T35"}},
        {"T34", {}, {"T8", "T11"}},
        {"T35", {}, {"T11"}},
    };
    return table;
}

}  // namespace pcf
