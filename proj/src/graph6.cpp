#include "iasl/graph6.hpp"

#include "iasl/error.hpp"

namespace iasl {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int value_at(std::string_view text, std::size_t pos, std::size_t line) {
  if (pos >= text.size()) throw ParseError("unexpected end of graph6 data", line, pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > 126) {
    throw ParseError("invalid graph6 character (code " + std::to_string(c) + ")", line, pos);
  }
  return c - kOffset;
}

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text, std::size_t line) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 record", line, pos);

  const std::size_t size_start = pos;
  std::size_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::size_t>(value_at(text, pos, line));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = n << 6 | static_cast<std::size_t>(value_at(text, pos++, line));
    if (n <= 258047) throw ParseError("non-minimal vertex count encoding", line, size_start);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = n << 6 | static_cast<std::size_t>(value_at(text, pos++, line));
    if (n <= 62) throw ParseError("non-minimal vertex count encoding", line, size_start);
  }
  for (std::size_t i = pos; i < text.size(); ++i) value_at(text, i, line);

  if (n > (std::size_t{1} << 32)) throw ParseError("vertex count " + std::to_string(n) + " is too large", line, size_start);
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    throw ParseError("expected " + std::to_string(chars) + " edge characters for " + std::to_string(n) +
                         " vertices, found " + std::to_string(text.size() - pos),
                     line, text.size() < pos + chars ? text.size() : pos + chars);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = value_at(text, pos + k / 6, line);
      if (chunk >> (5 - k % 6) & 1) edges.push_back({i, j});
    }
  }
  for (; k < chars * 6; ++k) {
    if (value_at(text, pos + k / 6, line) >> (5 - k % 6) & 1) {
      throw ParseError("non-zero padding bits", line, pos + k / 6);
    }
  }
  return Graph::build(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = chunk << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    out.push_back(parse_graph6(text, line));
  }
  return out;
}

}  // namespace iasl
