#include "orelab/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace orelab {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly two integers separated by whitespace.
bool parse_pair(std::string_view line, long &a, long &b) {
  const char *p = line.data();
  const char *end = line.data() + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t'))
      ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{})
    return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t'))
    return false;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{})
    return false;
  p = r2.ptr;
  skip();
  return p == end;
}

} // namespace

std::string to_text(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph from_text(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank_or_comment(lines[i]))
    ++i;
  if (i == lines.size())
    throw ParseError(1, "missing header line \"n m\"");
  long n = 0, m = 0;
  if (!parse_pair(lines[i], n, m))
    throw ParseError(static_cast<int>(i + 1), "expected \"n m\"");
  if (n < 0 || n > kMaxVertices)
    throw ParseError(static_cast<int>(i + 1),
                     "vertex count " + std::to_string(n) + " outside [0, 64]");
  if (m < 0 || m > n * (n - 1) / 2)
    throw ParseError(static_cast<int>(i + 1),
                     "edge count " + std::to_string(m) + " impossible");
  std::vector<Edge> edges;
  ++i;
  for (; i < lines.size() && static_cast<long>(edges.size()) < m; ++i) {
    if (blank_or_comment(lines[i]))
      continue;
    long u = 0, v = 0;
    if (!parse_pair(lines[i], u, v))
      throw ParseError(static_cast<int>(i + 1), "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(static_cast<int>(i + 1), "endpoint out of range");
    if (u == v)
      throw ParseError(static_cast<int>(i + 1), "loop");
    edges.push_back({static_cast<int>(std::min(u, v)),
                     static_cast<int>(std::max(u, v))});
    for (std::size_t j = 0; j + 1 < edges.size(); ++j)
      if (edges[j] == edges.back())
        throw ParseError(static_cast<int>(i + 1), "repeated edge");
  }
  if (static_cast<long>(edges.size()) < m)
    throw ParseError(static_cast<int>(lines.size()),
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  for (; i < lines.size(); ++i)
    if (!blank_or_comment(lines[i]))
      throw ParseError(static_cast<int>(i + 1), "trailing content");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0)
    out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<"))
    s.remove_prefix(10);
  if (s.empty())
    throw std::invalid_argument("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126)
      throw std::invalid_argument("invalid graph6 character");
  std::size_t pos = 0;
  int n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126)
      throw std::invalid_argument("graph6 order too large");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6 order " + std::to_string(n) +
                                " exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (s.size() - pos != (bits + 5) / 6)
    throw std::invalid_argument("graph6 length does not match order");
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1)
        b.add_edge(i, j);
    }
  }
  return b.build();
}

std::vector<Graph> read_graphs(std::istream &in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && blank_or_comment(lines[first]))
    ++first;
  if (first == lines.size())
    return {};
  long a = 0, b = 0;
  if (parse_pair(lines[first], a, b))
    return {from_text(text)};
  std::vector<Graph> out;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (blank_or_comment(lines[i]))
      continue;
    std::string_view line = lines[i];
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    try {
      out.push_back(from_graph6(line));
    } catch (const std::invalid_argument &e) {
      throw ParseError(static_cast<int>(i + 1), e.what());
    }
  }
  return out;
}

} // namespace orelab
