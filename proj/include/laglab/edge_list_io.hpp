#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "laglab/error.hpp"
#include "laglab/rgraph.hpp"

namespace laglab {

/// Canonical edge-list text: a header line `r n m`, then one edge per line as
/// space-separated ascending 1-based vertices, edges in colex order.
inline std::string to_edge_list(const RGraph& g) {
  std::string out = std::to_string(g.uniformity()) + " " + std::to_string(g.order()) + " " +
                    std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += e.to_string();
    out += '\n';
  }
  return out;
}

namespace detail {

struct Token {
  std::int64_t value;
  std::size_t column;
};

// Splits one line into integers; blank lines and `#` comments yield nothing.
inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++pos;
      continue;
    }
    std::int64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r' && *ptr != '#')) {
      throw ParseError(line_no, pos + 1, "expected an integer");
    }
    out.push_back({value, pos + 1});
    pos += static_cast<std::size_t>(ptr - first);
  }
  return out;
}

}  // namespace detail

/// Parses the edge-list format. Edges may appear in any order; the result
/// is canonical. Errors carry the 1-based line and column.
inline RGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool have_header = false;
  std::int64_t r = 0, n = 0, m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, stop - start);
    ++line_no;
    start = stop + 1;

    const auto tokens = detail::tokenize(line, line_no);
    if (tokens.empty()) {
      if (stop == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 3) {
        throw ParseError(line_no, tokens.front().column, "header must be `r n m`");
      }
      r = tokens[0].value;
      n = tokens[1].value;
      m = tokens[2].value;
      if (r < 1) throw ParseError(line_no, tokens[0].column, "uniformity must be positive");
      if (n < 0) throw ParseError(line_no, tokens[1].column, "vertex bound must be non-negative");
      if (m < 0) throw ParseError(line_no, tokens[2].column, "edge count must be non-negative");
      if (static_cast<std::uint64_t>(m) > binomial(n, r)) {
        throw ParseError(line_no, tokens[2].column, "more edges than r-subsets of [n]");
      }
      have_header = true;
    } else {
      if (static_cast<std::int64_t>(tokens.size()) != r) {
        throw ParseError(line_no, tokens.front().column,
                         "edge has " + std::to_string(tokens.size()) + " vertices, expected " + std::to_string(r));
      }
      std::vector<int> vertices;
      for (std::size_t s = 0; s < tokens.size(); ++s) {
        const auto& tok = tokens[s];
        if (tok.value < 1 || tok.value > n) {
          throw ParseError(line_no, tok.column, "vertex " + std::to_string(tok.value) + " outside [1, " +
                                                    std::to_string(n) + "]");
        }
        if (s > 0 && tokens[s - 1].value >= tok.value) {
          throw ParseError(line_no, tok.column, "vertices must be strictly increasing");
        }
        vertices.push_back(static_cast<int>(tok.value));
      }
      Edge e(std::move(vertices));
      const std::uint64_t rank = colex_rank(e);
      if (seen.contains(rank)) {
        throw ParseError(line_no, tokens.front().column, "duplicate edge {" + e.to_string() + "}");
      }
      if (static_cast<std::int64_t>(edges.size()) == m) {
        throw ParseError(line_no, tokens.front().column, "more edges than the header announces");
      }
      seen.insert(rank);
      edges.push_back(std::move(e));
    }
    if (stop == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing `r n m` header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(line_no, 1, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
  }
  return RGraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

inline RGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

}  // namespace laglab
