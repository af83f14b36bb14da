#ifndef VCSS_GRAPH_IO_HPP
#define VCSS_GRAPH_IO_HPP

// Line-oriented graph file format:
//   c <comment>
//   p <vertex_count> <edge_count>
//   e <a> <b>            (one line per edge, in edge id order)
// Round trips are exact up to whitespace.

#include <stdexcept>
#include <string>

#include "vcss/multigraph.hpp"

namespace vcss {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

Multigraph load_graph(const std::string& text);
std::string save_graph(const Multigraph& g);

Multigraph load_graph_file(const std::string& path);
void save_graph_file(const Multigraph& g, const std::string& path);

// Edge list section only ("e a b" lines); used for emitting covers.
std::string save_edge_set(const EdgeSet& s);
// Resolve an edge list against a host graph; each line must name an existing
// edge, parallel copies are consumed smallest id first.
EdgeSet load_edge_set(const Multigraph& g, const std::string& text);

} // namespace vcss

#endif
