#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

#include <string>
#include <vector>

namespace rainbow {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string &out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

int sextet(std::string_view text, std::size_t at) {
  const auto c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126)
    throw ParseError("graph6 byte out of range", at);
  return c - 63;
}

} // namespace

std::string write_graph6(const Graph &g) {
  std::string out;
  const int n = g.order();
  append_order(out, n);

  int acc = 0, bits = 0;
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0)
    out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader)
    pos = kHeader.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r'))
    --end;
  if (pos >= end)
    throw ParseError("empty graph6 string", pos);

  std::int64_t n = 0;
  if (text[pos] != '~') {
    n = sextet(text, pos);
    pos += 1;
  } else if (pos + 1 < end && text[pos + 1] == '~') {
    if (pos + 8 > end)
      throw ParseError("truncated graph6 order field", end);
    for (std::size_t i = pos + 2; i < pos + 8; ++i)
      n = (n << 6) | sextet(text, i);
    pos += 8;
  } else {
    if (pos + 4 > end)
      throw ParseError("truncated graph6 order field", end);
    for (std::size_t i = pos + 1; i < pos + 4; ++i)
      n = (n << 6) | sextet(text, i);
    pos += 4;
  }
  if (n > 100000)
    throw ParseError("graph6 order too large", 0);

  const std::int64_t pairs = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((pairs + 5) / 6);
  if (end - pos != expected)
    throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) +
                         " data bytes, found " + std::to_string(end - pos),
                     end - pos < expected ? end : pos + expected);

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int bit = 5 - static_cast<int>(k % 6);
      if ((sextet(text, at) >> bit) & 1)
        edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    const std::size_t last = end - 1;
    const int pad = 6 - static_cast<int>(pairs % 6);
    if (sextet(text, last) & ((1 << pad) - 1))
      throw ParseError("nonzero graph6 padding bits", last);
  }
  return Graph(static_cast<int>(n), edges);
}

} // namespace rainbow
