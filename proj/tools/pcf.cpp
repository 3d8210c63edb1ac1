#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "accept.hpp"
#include "pcf/colorer.hpp"
#include "pcf/coloring.hpp"
#include "pcf/discharge.hpp"
#include "pcf/gen.hpp"
#include "pcf/graph.hpp"
#include "pcf/io.hpp"
#include "pcf/patterns.hpp"
#include "pcf/solver.hpp"

namespace {

using nlohmann::json;
using namespace pcf;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // UNSAT, non-PCF, not found
constexpr int kExitUsage = 2;      // usage or I/O error
constexpr int kExitInternal = 3;   // broken invariant (ExtensionFailed etc.)

std::uint64_t budget_from_env() {
    if (const char* s = std::getenv("PCF_BUDGET")) return std::stoull(s);
    return kDefaultBudget;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in, path);
}

// named families: C<l>, P<l>, SK<n>
Graph named_graph(const std::string& name) {
    std::size_t digits = name.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0)
        throw std::runtime_error("bad named graph `" + name + "` (expected C<l>, P<l> or SK<n>)");
    try {
        return gen_named(name.substr(0, digits), std::stoi(name.substr(digits)));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());  // bad user input, not an internal fault
    }
}

Graph graph_arg(const std::string& file, const std::string& named) {
    if (!named.empty()) return named_graph(named);
    if (file.empty()) throw std::runtime_error("need a graph file or --named");
    return load_graph(file);
}

GraphClass class_arg(const std::string& name) {
    if (name == "k4mf") return GraphClass::K4MinorFree;
    if (name == "o1p") return GraphClass::Outer1Planar;
    if (name == "girth12") return GraphClass::PlanarGirth12;
    throw std::runtime_error("unknown class `" + name + "`");
}

std::uint64_t ensure_seed(std::optional<std::uint64_t> seed, bool json_out, json& blob) {
    if (!seed) {
        seed = std::random_device{}();
        if (!json_out) std::cout << "seed " << *seed << " (derived)\n";
    }
    blob["seed"] = *seed;
    return *seed;
}

std::string fifths_str(long long q) {
    if (q % 5 == 0) return std::to_string(q / 5);
    return std::to_string(q) + "/5";
}

void emit(const json& blob, bool json_out, const std::string& human) {
    if (json_out)
        std::cout << blob.dump(2) << "\n";
    else
        std::cout << human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper conflict-free list coloring toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable JSON output");

    std::string graph_file, named, lists_file, coloring_file, cls_name, out_file, trace_file, id;
    std::optional<std::uint64_t> seed;
    int k = 2, universe = 0, n = 10;
    bool all = false, quick = false, uniform = false;

    auto* verify = app.add_subcommand("verify", "check a coloring for the PCF property");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("coloring", coloring_file)->required();
    verify->add_option("--lists", lists_file);

    auto* solve_cmd = app.add_subcommand("solve", "exact PCF list-coloring search");
    solve_cmd->add_option("graph", graph_file);
    solve_cmd->add_option("--named", named);
    solve_cmd->add_option("--lists", lists_file);
    solve_cmd->add_option("--k", k, "random (degree+k) lists / uniform k-lists");
    solve_cmd->add_option("--universe", universe);
    solve_cmd->add_option("--seed", seed);
    solve_cmd->add_flag("--uniform", uniform, "uniform {1..k} lists");

    auto* chi_cmd = app.add_subcommand("chi", "smallest k with a PCF k-coloring");
    chi_cmd->add_option("graph", graph_file);
    chi_cmd->add_option("--named", named);

    auto* refute = app.add_subcommand("refute", "search for a bad (degree+k) assignment");
    refute->add_option("graph", graph_file);
    refute->add_option("--named", named);
    refute->add_option("--k", k)->required();
    refute->add_option("--universe", universe)->required();

    auto* color_cmd = app.add_subcommand("color", "constructive colorer with reduction trace");
    color_cmd->add_option("graph", graph_file);
    color_cmd->add_option("--named", named);
    color_cmd->add_option("--class", cls_name)->required();
    color_cmd->add_option("--k", k, "2, 3, or 6 (uniform 6-lists)")->required();
    color_cmd->add_option("--lists", lists_file);
    color_cmd->add_option("--seed", seed);
    color_cmd->add_option("--trace", trace_file);
    color_cmd->add_option("-o", out_file);

    auto* detect = app.add_subcommand("detect", "match catalog configurations");
    detect->add_option("graph", graph_file);
    detect->add_option("--named", named);
    detect->add_option("--class", cls_name);
    detect->add_option("--id", id);
    detect->add_flag("--all", all);

    auto* discharge = app.add_subcommand("discharge", "thread decomposition and charges");
    discharge->add_option("graph", graph_file);
    discharge->add_option("--named", named);

    auto* gen = app.add_subcommand("gen", "certified random instances");
    gen->add_option("--class", cls_name)->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--seed", seed);
    gen->add_option("-o", out_file);

    auto* accept_cmd = app.add_subcommand("accept", "run the acceptance suite");
    accept_cmd->add_flag("--quick", quick);

    for (CLI::App* sc : {verify, solve_cmd, chi_cmd, refute, color_cmd, detect, discharge, gen, accept_cmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        json blob;
        if (*verify) {
            Graph g = load_graph(graph_file);
            Coloring phi = coloring_from_json(read_file(coloring_file));
            ListAssignment L;
            bool have_lists = !lists_file.empty();
            if (have_lists) L = lists_from_json(read_file(lists_file));
            UniqueColorReport rep = is_pcf(g, phi, have_lists ? &L : nullptr);
            blob["proper"] = rep.proper;
            blob["conflict_free"] = rep.conflict_free;
            blob["respects_lists"] = rep.respects_lists;
            blob["verdict"] = rep.verdict;
            std::string human = rep.verdict ? "PCF\n" : "not PCF\n";
            if (rep.violating_edge) {
                blob["violating_edge"] = {rep.violating_edge->first, rep.violating_edge->second};
                human += "violating edge " + std::to_string(rep.violating_edge->first) + "-" +
                         std::to_string(rep.violating_edge->second) + "\n";
            }
            if (rep.starved_vertex) {
                blob["starved_vertex"] = *rep.starved_vertex;
                human += "no unique neighbor color at " + std::to_string(*rep.starved_vertex) + "\n";
            }
            if (rep.off_list_vertex) {
                blob["off_list_vertex"] = *rep.off_list_vertex;
                human += "off-list color at " + std::to_string(*rep.off_list_vertex) + "\n";
            }
            emit(blob, json_out, human);
            return rep.verdict ? kExitOk : kExitViolation;
        }
        if (*solve_cmd) {
            Graph g = graph_arg(graph_file, named);
            ListAssignment L;
            if (!lists_file.empty())
                L = lists_from_json(read_file(lists_file));
            else if (uniform)
                L = uniform_lists(g, k);
            else {
                int uni = universe ? universe : g.max_degree() + k + 2;
                L = degree_plus_k(g, k, uni, ensure_seed(seed, json_out, blob));
            }
            SolveOutcome out = solve(g, L, budget_from_env());
            blob["nodes"] = out.nodes;
            if (out.status == SolveStatus::Sat) {
                blob["status"] = "sat";
                blob["coloring"] = json::parse(coloring_to_json(out.coloring));
                emit(blob, json_out, "SAT\n" + coloring_to_json(out.coloring) + "\n");
                return kExitOk;
            }
            blob["status"] = out.status == SolveStatus::Unsat ? "unsat" : "budget-exhausted";
            emit(blob, json_out, std::string(blob["status"]) + "\n");
            return out.status == SolveStatus::Unsat ? kExitViolation : kExitUsage;
        }
        if (*chi_cmd) {
            Graph g = graph_arg(graph_file, named);
            int chi = chi_pcf(g, budget_from_env());
            blob["chi_pcf"] = chi;
            emit(blob, json_out, std::to_string(chi) + "\n");
            return kExitOk;
        }
        if (*refute) {
            Graph g = graph_arg(graph_file, named);
            RefutationOutcome out = refute_choosability(g, k, universe, budget_from_env());
            blob["assignments_tried"] = out.assignments_tried;
            blob["exhausted_universe"] = out.exhausted_universe;
            if (out.bad_lists) {
                blob["bad_lists"] = json::parse(lists_to_json(*out.bad_lists));
                emit(blob, json_out, "refuted:\n" + lists_to_json(*out.bad_lists) + "\n");
                return kExitOk;
            }
            emit(blob, json_out, "not found (universe exhausted)\n");
            return kExitViolation;
        }
        if (*color_cmd) {
            Graph g = graph_arg(graph_file, named);
            GraphClass cls = class_arg(cls_name);
            Strategy strat = strategy_for(cls, k);
            ListAssignment L;
            if (!lists_file.empty())
                L = lists_from_json(read_file(lists_file));
            else if (k == 6)
                L = uniform_lists(g, 6);
            else
                L = degree_plus_k(g, k, g.max_degree() + k + 2, ensure_seed(seed, json_out, blob));
            ColorResult res = color(g, L, strat);
            if (!is_pcf(g, res.phi, &L).verdict)
                throw std::logic_error("colorer output failed verification");
            blob["coloring"] = json::parse(coloring_to_json(res.phi));
            blob["trace_steps"] = res.trace.steps.size();
            if (!trace_file.empty()) write_file(trace_file, trace_to_json(res.trace));
            if (!out_file.empty()) write_file(out_file, coloring_to_json(res.phi));
            emit(blob, json_out, coloring_to_json(res.phi) + "\n");
            return kExitOk;
        }
        if (*detect) {
            Graph g = graph_arg(graph_file, named);
            std::vector<std::string> ids;
            if (!id.empty())
                ids = {id};
            else if (!cls_name.empty())
                ids = strategy_ids(strategy_for(class_arg(cls_name), 2));
            else
                ids = pattern_ids();
            blob["matches"] = json::array();
            std::string human;
            bool any = false;
            for (const auto& pid : ids) {
                auto m = find(g, pid);
                if (!m) continue;
                any = true;
                json jm;
                jm["id"] = pid;
                for (const auto& [r, v] : m->assignment) jm["roles"][r] = v;
                blob["matches"].push_back(jm);
                human += pid + ":";
                for (const auto& [r, v] : m->assignment) human += " " + r + "=" + std::to_string(v);
                human += "\n";
                if (!all) break;
            }
            emit(blob, json_out, any ? human : "no match\n");
            return any ? kExitOk : kExitViolation;
        }
        if (*discharge) {
            Graph g = graph_arg(graph_file, named);
            PropertyReport props = check_properties(g);
            blob["properties"] = json::array();
            std::string human;
            for (int i = 0; i < 5; ++i) {
                json jp;
                jp["id"] = "P" + std::to_string(i + 1);
                jp["holds"] = props.holds[i];
                if (props.witness[i]) jp["witness"] = props.witness[i]->pattern_id;
                blob["properties"].push_back(jp);
                human += "P" + std::to_string(i + 1) + ": " + (props.holds[i] ? "holds" : "fails") +
                         (props.witness[i] ? " (" + props.witness[i]->pattern_id + ")" : "") + "\n";
            }
            if (g.is_cycle()) {
                blob["outcome"] = "cycle";  // classified: the rules do not apply
                human += "cycle: discharging rules not applicable\n";
            } else {
                auto [initial, final_] = run_discharging(g);
                blob["outcome"] = "ok";
                blob["charges"] = json::object();
                for (Vertex v : g.vertices()) {
                    blob["charges"][std::to_string(v)] = {fifths_str(initial.fifths.at(v)),
                                                          fifths_str(final_.fifths.at(v))};
                    human += std::to_string(v) + ": " + fifths_str(initial.fifths.at(v)) + " -> " +
                             fifths_str(final_.fifths.at(v)) + "\n";
                }
                blob["total"] = fifths_str(initial.total());
                human += "total " + fifths_str(initial.total()) + " (conserved)\n";
            }
            emit(blob, json_out, human);
            return kExitOk;
        }
        if (*gen) {
            std::uint64_t s = ensure_seed(seed, json_out, blob);
            GenResult res;
            if (cls_name == "k4mf")
                res = gen_k4mf(n, s);
            else if (cls_name == "o1p")
                res = gen_o1p(n, s);
            else if (cls_name == "o1p4")
                res = gen_o1p(n, s, 4);
            else if (cls_name == "girth12")
                res = gen_girth12(n, s);
            else
                throw std::runtime_error("unknown class `" + cls_name + "`");
            std::string el = emit_edge_list(res.g);
            if (!out_file.empty()) {
                write_file(out_file, el);
                write_file(out_file + ".cert.json", certificate_to_json(res.cert));
                if (!json_out) std::cout << "wrote " << out_file << "\n";
            } else {
                std::cout << el;
            }
            blob["n"] = res.g.num_vertices();
            blob["m"] = res.g.num_edges();
            blob["certificate"] = json::parse(certificate_to_json(res.cert));
            if (json_out) std::cout << blob.dump(2) << "\n";
            return kExitOk;
        }
        if (*accept_cmd) {
            auto results = pcf::accept::run_all(quick, json_out ? nullptr : &std::cerr);
            if (json_out) {
                blob["criteria"] = json::array();
                for (const auto& r : results)
                    blob["criteria"].push_back({{"id", r.id},
                                                {"name", r.name},
                                                {"pass", r.pass},
                                                {"summary", json::parse(r.json)}});
                std::cout << blob.dump(2) << "\n";
                bool all_pass = true;
                for (const auto& r : results) all_pass = all_pass && r.pass;
                return all_pass ? kExitOk : kExitViolation;
            }
            return pcf::accept::report(results, std::cout) ? kExitOk : kExitViolation;
        }
    } catch (const ExtensionFailed& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NoConfigFound& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::logic_error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
