#pragma once
// graph6 text codec (short form, order <= 62). The upper triangle is packed
// column by column -- bit order (0,1),(0,2),(1,2),(0,3),... -- six bits per
// printable byte, most significant bit first, value offset 63.

#include <string>
#include <string_view>

#include "specconn/graph.hpp"

namespace specconn {

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);  // strict: throws on malformed input

}  // namespace specconn
