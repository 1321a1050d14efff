#pragma once

#include <string_view>
#include <vector>

#include "zeroforce/graph.hpp"

namespace zf {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

// Hamiltonian cycle of length repeats*|shifts| plus one chord i -> i+shift
// per vertex, shifts applied cyclically. Requires an even cycle length >= 3.
Graph lcf(const std::vector<int>& shifts, int repeats);

Graph petersen();        // lcf does not cover it; built from the two pentagons
Graph heawood();         // lcf([5,-5], 7)
Graph mcgee();           // lcf([12,7,-7], 8)
Graph tutte_coxeter();   // lcf([-13,-9,7,-7,9,13], 5)

// Hexagon 0..5 plus vertex 6 adjacent to 1 and 4: the unique densest
// {C3,C4}-free graph on 7 vertices.
Graph g7();
// g7 plus vertex 7 adjacent to 2 and 5: the 8-vertex analogue.
Graph g8();

// Textual generator spec: a bare name (petersen, heawood, mcgee,
// tutte_coxeter, g7, g8) or name(args) with integer args (path, cycle,
// complete, complete_bipartite) or lcf([s1,s2,...], repeats).
// Syntax errors raise ParseError; bad parameter values ConstructionError.
Graph generate(std::string_view spec);

}  // namespace zf
