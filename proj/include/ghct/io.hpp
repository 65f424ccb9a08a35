#ifndef GHCT_IO_HPP
#define GHCT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

struct ParsedGraph {
    Graph graph;
    // DIMACS max-flow files designate terminals; native files leave these unset.
    std::optional<int> source;
    std::optional<int> sink;
};

/// Parse a graph from text. Two formats are auto-detected by the `p` header:
///  - native: `p ghct <n> <m>`, edge lines `e <u> <v> <w>` (1-based ids,
///    positive decimal weights), comments `c ...`.
///  - DIMACS max-flow: `p max <n> <m>`, node lines `n <id> s|t`, arc lines
///    `a <u> <v> <w>`; arcs between the same vertex pair (either direction)
///    are merged by summing weights.
/// Throws ParseError (with a 1-based line number) on malformed input.
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph(const std::string& path);

/// Native-format serialization; weights are printed with enough digits to
/// round-trip exactly.
std::string serialize_graph(const Graph& g);

/// Strength labels: one `k <edge-index> <value>` line per edge, 0-based
/// indices matching the graph's edge order.
std::vector<double> parse_labels_text(const std::string& text, int edge_count);
std::vector<double> load_labels(const std::string& path, int edge_count);
std::string serialize_labels(const std::vector<double>& labels);

/// Write via a temporary file in the same directory plus rename, so readers
/// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest, lowercase hex.
std::string content_digest(const std::string& content);

}  // namespace ghct

#endif
