#include "factorlab/graph6.hpp"

#include "factorlab/errors.hpp"

namespace factorlab {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 byte " + std::to_string(c) + " outside printable range 63..126",
                     pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  int n = 0;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
      throw ParseError("eight-byte graph6 size form is not supported", pos + 1);
    }
    if (pos + 4 > text.size()) throw ParseError("truncated graph6 size field", text.size());
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | decode_byte(text, pos + k);
    if (n > kMaxVertices) {
      throw ParseError("graph of order " + std::to_string(n) + " exceeds 64 vertices", pos);
    }
    if (n < 63) throw ParseError("non-canonical graph6 size field", pos);
    pos += 4;
  } else {
    n = decode_byte(text, pos);
    ++pos;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("truncated graph6 adjacency data", text.size());
  if (text.size() > pos + body) throw ParseError("trailing bytes after graph6 data", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = decode_byte(text, pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - static_cast<int>(bits % 6))) - 1;
    if (decode_byte(text, last) & pad_mask) throw ParseError("nonzero graph6 padding bits", last);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace factorlab
