#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "zeroforce/graph.hpp"

// Independent oracles and fixtures for the test suites. Everything here is
// deliberately brute force and shares no logic with the library under test.
namespace zftest {

// Shortest simple cycle by DFS path enumeration anchored at the cycle's
// smallest vertex. Intended for n <= 10.
std::optional<int> girth_brute(const zf::Graph& g);

// Isomorphism by trying every vertex permutation. Intended for n <= 8.
bool isomorphic_brute(const zf::Graph& a, const zf::Graph& b);

zf::Graph random_graph(int n, double edge_prob, std::mt19937& rng);

// One representative per isomorphism class of connected graphs of order n,
// grown by attaching vertex n-1 to every nonempty subset of each smaller
// class. Known class counts for n = 1..8:
// 1, 1, 2, 6, 21, 112, 853, 11117.
std::vector<zf::Graph> connected_classes(int n);

// Every fixed point of the forcing process reachable by some force order,
// as colored-set bitmasks. Order-invariance of the process means this has
// exactly one element. Intended for n <= 16.
std::set<std::uint32_t> all_final_masks(const zf::Graph& g, std::uint32_t initial_mask);

// Flat enumeration over all 2^C(n,2) adjacency masks, no pruning: maximum
// edges without 3- or 4-cycles and the number of attaining classes.
struct FlatExtremal {
    int max_edges = 0;
    int witness_classes = 0;
};
FlatExtremal max_c3c4_free_brute(int n);  // n <= 6

}  // namespace zftest
