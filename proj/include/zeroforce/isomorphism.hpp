#pragma once

#include "zeroforce/graph.hpp"

namespace zf {

inline constexpr int kIsomorphismMaxOrder = 12;

// Backtracking bijection search with degree and neighbor-degree pruning.
// Only meant for the small uniqueness arguments, hence the hard order cap.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace zf
