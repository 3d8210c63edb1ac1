#include "pcf/discharge.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace pcf {

std::vector<const Thread*> ThreadDecomposition::at(Vertex v) const {
    std::vector<const Thread*> out;
    for (const auto& t : threads) {
        if (t.a == v) out.push_back(&t);
        if (t.b == v) out.push_back(&t);
    }
    return out;
}

ThreadDecomposition threads(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("threads: graph must be connected");
    if (g.is_cycle()) throw std::invalid_argument("threads: cycles have no 3+ endpoints");
    ThreadDecomposition out;
    std::set<Vertex> seen_interior;
    for (Vertex u : g.vertices()) {
        if (g.degree(u) < 3) continue;
        out.thread2_count[u];  // ensure an entry for every 3+ vertex
        for (Vertex x : g.neighbors(u)) {
            if (g.degree(x) != 2 || seen_interior.count(x)) continue;
            // walk the 2-vertex path away from u
            std::vector<Vertex> interior;
            Vertex prev = u, cur = x;
            while (g.degree(cur) == 2) {
                interior.push_back(cur);
                Vertex next = -1;
                for (Vertex w : g.neighbors(cur))
                    if (w != prev) next = w;
                prev = cur;
                cur = next;
            }
            if (g.degree(cur) < 3) continue;  // pendant path; not a thread
            Thread t;
            t.a = std::min(u, cur);
            t.b = std::max(u, cur);
            t.interior = interior;
            if (t.a != u) std::reverse(t.interior.begin(), t.interior.end());
            for (Vertex v : interior) seen_interior.insert(v);
            out.threads.push_back(std::move(t));
        }
    }
    for (const auto& t : out.threads) {
        out.thread2_count[t.a] += static_cast<int>(t.interior.size());
        out.thread2_count[t.b] += static_cast<int>(t.interior.size());
    }
    return out;
}

bool PropertyReport::all() const {
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

PropertyReport check_properties(const Graph& g) {
    PropertyReport rep;
    auto probe = [&](int i, std::initializer_list<const char*> ids) {
        rep.holds[i] = true;
        for (const char* id : ids) {
            auto m = find(g, id);
            if (m) {
                rep.holds[i] = false;
                rep.witness[i] = m;
                break;
            }
        }
    };
    probe(0, {"T1"});
    probe(1, {"T8"});
    probe(2, {"T5"});
    probe(3, {"T11", "T12"});
    probe(4, {"T36"});
    return rep;
}

long long ChargeLedger::total() const {
    long long sum = 0;
    for (auto [v, q] : fifths) sum += q;
    return sum;
}

std::pair<ChargeLedger, ChargeLedger> run_discharging(const Graph& g) {
    ThreadDecomposition td = threads(g);
    ChargeLedger initial{{}, "initial"}, final_{{}, "final"};
    for (Vertex v : g.vertices()) initial.fifths[v] = 5LL * g.degree(v) - 12;
    final_.fifths = initial.fifths;
    for (const auto& t : td.threads) {
        for (Vertex e : {t.a, t.b}) {
            long long amount = g.degree(e) == 4 ? 2 : 1;  // R1/R3 send 1/5, R2 sends 2/5
            for (Vertex x : t.interior) {
                final_.fifths[e] -= amount;
                final_.fifths[x] += amount;
            }
        }
    }
    assert(initial.total() == final_.total());
    return {initial, final_};
}

DischargeReport verify_contradiction(const Graph& g, const ClassCertificate& cert) {
    if (cert.tag != GraphClass::PlanarGirth12)
        throw std::invalid_argument("verify_contradiction requires a PlanarGirth12 certificate");
    DischargeReport rep;
    long long n = static_cast<long long>(g.num_vertices());
    long long m = static_cast<long long>(g.num_edges());
    rep.sum_initial_fifths = 10 * m - 12 * n;
    rep.sum_at_most_minus_24 = rep.sum_initial_fifths <= -24;
    rep.edge_bound_ok = 5 * m <= 6 * (n - 2);
    rep.is_cycle = g.is_cycle();
    if (!rep.is_cycle) {
        auto [initial, final_] = run_discharging(g);
        rep.conserved = initial.total() == final_.total();
    }
    rep.properties = check_properties(g);
    for (std::size_t i = 0; i < 5; ++i)
        if (!rep.properties.holds[i]) {
            rep.present_config = rep.properties.witness[i]->pattern_id;
            break;
        }
    return rep;
}

}  // namespace pcf
