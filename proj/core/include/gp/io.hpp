#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// File formats (all three are line-oriented, '#' starts a comment, blank
// lines are ignored, fields are TAB-separated though any run of blanks is
// accepted on input):
//   graph:    x <TAB> y <TAB> mu      one undirected edge per line
//   function: x <TAB> value
//   vertices: x                       one id per line
// Parse failures throw input_error with "name:line:column: message".
//
// Graph files written by this library include the annotation comment
//   # cover center=<id> radius=<r>
// when the graph carries one; the parser recognizes it and reattaches the
// annotation. Other readers see an ordinary comment.

WeightedGraph parse_graph(std::istream& in, const std::string& name = "<input>");
WeightedGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);
std::string graph_text(const WeightedGraph& g);
void save_graph(const std::string& path, const WeightedGraph& g);

GraphFunction parse_function(std::istream& in, const std::string& name = "<input>");
GraphFunction load_function(const std::string& path);
void write_function(std::ostream& out, const GraphFunction& f);
std::string function_text(const GraphFunction& f);
void save_function(const std::string& path, const GraphFunction& f);

std::vector<VertexId> parse_vertex_list(std::istream& in, const std::string& name = "<input>");
std::vector<VertexId> load_vertex_list(const std::string& path);
void write_vertex_list(std::ostream& out, const std::vector<VertexId>& vs);
void save_vertex_list(const std::string& path, const std::vector<VertexId>& vs);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace gp
