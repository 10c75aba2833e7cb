#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symentropy/distribution.hpp"
#include "symentropy/graph.hpp"

namespace symentropy::cli {

// "n m" header then m lines "u v" (0-based); blank lines and '#' comments
// are skipped. Errors are kParseError and name the offending line.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

// "builtin:<name>" or a path to an edge-list file.
Graph load_graph(const std::string& source);

// "uniform", a comma-separated list of decimals or fractions, or a path to a
// file holding such a list. All-fraction input stays exact; otherwise the
// sum must be within 1e-9 of 1.
Distribution parse_distribution(const std::string& text, int n);

// FNV-1a (64-bit) over the canonical edge list.
std::uint64_t input_digest(const Graph& g);

// Exit codes: 0 computed, 1 usage or input error, 2 size cap, 3 invariant
// violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symentropy::cli
