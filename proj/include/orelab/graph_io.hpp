#ifndef ORELAB_GRAPH_IO_HPP
#define ORELAB_GRAPH_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Edge-list text: "n m" then m lines "u v" (u < v, ascending), each line
/// newline-terminated.
std::string to_text(const Graph &g);
Graph from_text(std::string_view text);

/// Standard graph6 (no header, no trailing newline).
std::string to_graph6(const Graph &g);
Graph from_graph6(std::string_view s);

/// Reads a file holding either one edge-list graph or any number of graph6
/// lines. Empty lines and lines starting with '#' are ignored.
std::vector<Graph> read_graphs(std::istream &in);

} // namespace orelab

#endif // ORELAB_GRAPH_IO_HPP
