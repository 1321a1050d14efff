#pragma once

#include <cstdint>
#include <string>

#include "zeroforce/graph.hpp"

namespace zf {

enum class Verdict { kHolds, kFails, kNotApplicable };

// PROVEN: theorem-backed range (girth <= 10). CONJECTURED: open range.
// UNCONDITIONAL: no girth hypothesis at all.
enum class Provenance { kProven, kConjectured, kUnconditional };

struct BoundVerdict {
    std::string name;
    long long value = 0;
    Verdict holds = Verdict::kNotApplicable;
    Provenance provenance = Provenance::kUnconditional;
};

// delta + (delta-2)(g-3), the conjectured forcing-number lower bound for
// graphs of minimum degree delta >= 2 and girth g. Proven for g <= 10.
long long girth_degree_bound(int delta, int g);

// Minimum-degree lower bound F >= delta, no hypotheses.
BoundVerdict delta_bound(const Graph& g, int forcing_number);

// n >= g(delta-1); applicable only for delta >= 2 and finite girth >= 5.
BoundVerdict order_bound_check(const Graph& g);

// Edge maximum of a triangle-free graph on n vertices.
long long mantel_max_edges(long long n);

// True iff (delta-1)^e >= 12(g+1)(delta+(delta-2)(g-3)) with
// e = floor((g-1)/2) - 1, evaluated in exact integer arithmetic. This is the
// degree threshold above which the known average-degree bound already
// implies the girth bound, so the flip points must be bit-exact.
bool davila_kenter_threshold(int delta, int g);

// Maximum edges of an n-vertex graph with no 3- or 4-cycle, n <= 8. Backed
// by the exhaustive search in the extremal module.
int ex_c3c4(int n);

}  // namespace zf
