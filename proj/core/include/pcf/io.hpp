#pragma once

#include <iosfwd>
#include <string>

#include "pcf/coloring.hpp"
#include "pcf/colorer.hpp"
#include "pcf/graph.hpp"

namespace pcf {

/// Edge-list text format: header `p <n> <m>`, then m lines `e <u> <v>`,
/// 0-based ids. Parse errors carry the offending line number.
Graph parse_edge_list(std::istream& in, const std::string& name = "<input>");
Graph parse_edge_list_string(const std::string& text, const std::string& name = "<input>");
std::string emit_edge_list(const Graph& g);

/// JSON formats: {"lists": {"<vid>": [c, ...]}} and {"colors": {"<vid>": c}}.
ListAssignment lists_from_json(const std::string& text);
std::string lists_to_json(const ListAssignment& lists);
Coloring coloring_from_json(const std::string& text);
std::string coloring_to_json(const Coloring& phi);

std::string certificate_to_json(const ClassCertificate& cert);
std::string trace_to_json(const ReductionTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pcf
