#pragma once

#include <utility>
#include <vector>

#include "zeroforce/forcing.hpp"
#include "zeroforce/graph.hpp"

namespace zf {

// Window decomposition of a forcing trace: the first L played vertices
// x_1..x_L, their closed neighborhoods and prefix unions, and the induced
// split of the initial set S into the S_i, their union SXstar, and SX.
// Arcs and gd live on window positions 0..L-1; position p is vertex X[p].
struct Decomposition {
    int n = 0;  // order of the source graph, universe of all sets here
    int L = 0;
    std::vector<int> X;            // played vertices, trace order
    std::vector<VertexSet> Xi;     // closed neighborhoods N[x_i]
    std::vector<VertexSet> Xle;    // prefix unions X_{<=1..i}
    std::vector<VertexSet> Si;     // S intersect (N(x_i) minus X_{<=i-1})
    VertexSet SXstar;
    VertexSet SX;
    std::vector<std::pair<int, int>> arcs;  // (i,j), i>j: N(x_i) meets X_j
    Graph gd{0};                   // arcs with direction dropped
    std::vector<int> t;            // |N(x_i) intersect X_{<=i-1}|
    std::vector<int> eps;          // 1 iff x_i forced outside X_{<=i-1}
    VertexSet initial;             // S, the trace's starting set

    int mD() const { return static_cast<int>(arcs.size()); }
};

struct ClaimReport {
    bool claim2a = false;             // |S| >= |SX| + |SXstar|
    bool claim2b = false;             // x_1 in SX
    bool claim2c_applicable = false;  // finite girth >= 5
    bool claim2c_holds = false;       // |SXstar| >= L(delta-1) - m(D)
    bool claim4a = false;             // played-but-not-initial vertices hang off earlier plays
    std::vector<bool> accounting;     // d(x_i) = t_i + |S_i| + eps_i per index
    bool gd_triangle_free = false;    // reported, never asserted
};

// Requires a replayable trace and 1 <= L <= number of steps.
Decomposition decompose(const Graph& g, const ForcingTrace& trace, int L);

// The accounting identity needs no girth hypothesis; claim2c is stated as
// the window inequality because one neighbor of x_i can lie in several X_j.
ClaimReport check_claims(const Graph& g, const Decomposition& dec);

}  // namespace zf
