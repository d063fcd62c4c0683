#include "aeq/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace aeq {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // 63 <= n <= 258047: '~' then n as three big-endian sextets.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
}

int parse_size(std::string_view line, std::size_t& pos) {
  if (pos >= line.size()) throw std::invalid_argument("graph6: empty line");
  const unsigned char c0 = static_cast<unsigned char>(line[pos]);
  if (c0 == 126) {
    if (pos + 3 >= line.size()) throw std::invalid_argument("graph6: truncated size field");
    if (static_cast<unsigned char>(line[pos + 1]) == 126)
      throw std::invalid_argument("graph6: graphs beyond 258047 vertices are unsupported");
    int n = 0;
    for (int k = 1; k <= 3; ++k) {
      const int v = static_cast<unsigned char>(line[pos + static_cast<std::size_t>(k)]) - kBias;
      if (v < 0 || v > 63) throw std::invalid_argument("graph6: bad size byte");
      n = (n << 6) | v;
    }
    pos += 4;
    return n;
  }
  const int n = c0 - kBias;
  if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad size byte");
  pos += 1;
  return n;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int sextet = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      sextet = (sextet << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(sextet + kBias));
        sextet = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((sextet << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view line) {
  std::size_t pos = 0;
  const int n = parse_size(line, pos);
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: more than 64 vertices is out of scope");
  Graph g(n);
  const int nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (static_cast<std::size_t>(nbits) + 5) / 6;
  if (line.size() - pos < nbytes) throw std::invalid_argument("graph6: truncated edge data");

  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int v = static_cast<unsigned char>(line[pos + static_cast<std::size_t>(bit / 6)]) - kBias;
      if (v < 0 || v > 63) throw std::invalid_argument("graph6: bad data byte");
      if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits of the final sextet must be zero.
  if (nbits % 6 != 0) {
    const int v = static_cast<unsigned char>(line[pos + static_cast<std::size_t>((nbits - 1) / 6)]) - kBias;
    if (v & ((1 << (6 - nbits % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_graph6_stream(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace aeq
