#pragma once
// Graph isomorphism for the small orders this library targets: iterated
// neighbor-color refinement to split the vertices into classes, then a
// backtracking search over class-respecting bijections. Deterministic:
// candidates are tried lowest index first.

#include "specconn/graph.hpp"

namespace specconn {

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace specconn
