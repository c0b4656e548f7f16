#include "specconn/graph6.hpp"

#include <stdexcept>

namespace specconn {

std::string graph6_encode(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int acc = 0, bits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  const unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126)
    throw std::invalid_argument("graph6: long form (order > 62) not supported");
  if (head < 63 || head > 63 + max_order)
    throw std::invalid_argument("graph6: bad order byte");
  const int n = head - 63;
  if (n < 1) throw std::invalid_argument("graph6: order must be >= 1");
  const int pairs = n * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() != 1 + body)
    throw std::invalid_argument("graph6: wrong length for order " +
                                std::to_string(n));
  Graph g = Graph::empty(n);
  int idx = 0, i = 0, j = 1;
  for (std::size_t p = 0; p < body; ++p) {
    const unsigned char c = static_cast<unsigned char>(text[1 + p]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad data byte");
    const int v = c - 63;
    for (int b = 5; b >= 0; --b, ++idx) {
      const int bit = v >> b & 1;
      if (idx >= pairs) {
        if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (bit) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

}  // namespace specconn
