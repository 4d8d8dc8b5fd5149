#ifndef SPECGRAPH_GRAPH_IO_HPP
#define SPECGRAPH_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Line-oriented text format:
///
///     # comment
///     vertex <id> m=<float> [c=<float>]
///     edge <id> <id> b=<float>
///
/// Unknown keys, duplicate vertex ids, duplicate edges and edges naming an
/// undeclared vertex are errors.  Numeric invariant violations (loops,
/// nonpositive measures, ...) load fine and are left to Graph::validate.
Graph read_graph_text(std::istream& in, const std::string& source_name = "<stream>");
void write_graph_text(std::ostream& out, const Graph& graph);

/// JSON variant: {"vertices":[{"id","m","c"}], "edges":[{"u","v","b"}]}.
Graph read_graph_json(std::istream& in, const std::string& source_name = "<stream>");
void write_graph_json(std::ostream& out, const Graph& graph);

/// Reads a graph file, picking the format from the extension (.json vs
/// anything else).  Writing mirrors the same rule.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& graph, const std::string& path);

} // namespace specgraph

#endif
