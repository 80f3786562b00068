#include "tough/graph6.hpp"

#include "tough/error.hpp"

namespace tough {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
constexpr std::size_t kShortLimit = 62;
constexpr std::size_t kLongLimit = 258047;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError(pos, "unexpected end of input");
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > kMaxByte) {
    throw ParseError(pos, "byte " + std::to_string(c) + " outside 63..126");
  }
  return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) == kMaxByte) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte) {
      throw ParseError(1, "orders above 258047 are not supported");
    }
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos));
    if (n <= kShortLimit) throw ParseError(1, "long-form order " + std::to_string(n) + " must use the short form");
  } else {
    n = static_cast<std::size_t>(sextet(text, 0));
    pos = 1;
  }
  if (n == 0) throw ParseError(0, "order 0 is not supported");

  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() < pos + body) throw ParseError(text.size(), "unexpected end of input");
  if (text.size() > pos + body) throw ParseError(pos + body, "trailing bytes after graph");

  Graph g(n);
  std::size_t k = 0;
  int current = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = sextet(text, pos + k / 6);
      if (current & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  }
  if (body > 0) {
    const std::size_t last = pos + body - 1;
    const int tail = sextet(text, last);
    const std::size_t used = pairs - (body - 1) * 6;
    if (tail & ((1 << (6 - used)) - 1)) throw ParseError(last, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kLongLimit) throw Error(Errc::size, "graph6 supports orders up to 258047");
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int current = 0;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) current |= 1 << (5 - k % 6);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(current + kOffset));
        current = 0;
      }
    }
  }
  if (k % 6 != 0) out.push_back(static_cast<char>(current + kOffset));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.offset(), e.detail() + " (line " + std::to_string(line_no) + ")");
    }
  }
  return graphs;
}

}  // namespace tough
