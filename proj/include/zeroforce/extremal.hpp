#pragma once

#include <cstdint>
#include <vector>

#include "zeroforce/graph.hpp"

namespace zf {

inline constexpr int kExtremalMaxOrder = 8;

struct ExtremalResult {
    int n = 0;
    int max_edges = 0;
    std::vector<Graph> witnesses;  // one per isomorphism class, sorted by edge list
    std::uint64_t explored = 0;    // search tree nodes
};

// Exhaustive maximum-edge search over graphs of order n with no 3- or
// 4-cycle. Depth-first over the fixed lexicographic list of vertex pairs,
// include-first, pruning insertions that close a short cycle and branches
// that cannot reach the incumbent (ties kept for the uniqueness claims).
ExtremalResult max_c3c4_free(int n);

// True iff the search yields exactly one witness class and it matches
// expected up to isomorphism.
bool verify_extremal_uniqueness(int n, const Graph& expected);

}  // namespace zf
