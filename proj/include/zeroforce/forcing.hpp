#pragma once

#include <utility>
#include <vector>

#include "zeroforce/graph.hpp"

namespace zf {

// Record of one deterministic run of the forcing process. Each step is
// (forcer, forced): the forcer was colored with exactly one uncolored
// neighbor, which it forced. final = initial plus all forced vertices.
struct ForcingTrace {
    VertexSet initial;
    std::vector<std::pair<int, int>> steps;
    VertexSet final;
};

// Reusable workspace for repeated closure runs on one graph. The subset
// search evaluates millions of closures, so per-call allocations are hoisted
// here. Not safe to share between threads; make one per worker.
class ClosureEngine {
public:
    explicit ClosureEngine(const Graph& g);

    // Runs the process from s to its fixed point; true iff everything ends
    // up colored. Candidates are kept in a ready-set updated per force.
    bool forces_all(const VertexSet& s);

    // Fixed point of the forcing process from s, without trace bookkeeping.
    VertexSet close(const VertexSet& s);

private:
    int run(const VertexSet& s);  // returns final colored count

    const Graph* g_;
    VertexSet colored_, uncolored_, ready_;
    std::vector<int> pending_;  // uncolored-neighbor count, colored vertices only
};

// One force per step; among all colored vertices with exactly one uncolored
// neighbor the lowest-index one is played. Stalling is a normal outcome.
ForcingTrace closure(const Graph& g, const VertexSet& s);

VertexSet closure_members(const Graph& g, const VertexSet& s);
bool is_forcing_set(const Graph& g, const VertexSet& s);

// Replays a trace against the step and final-set invariants.
bool is_valid_trace(const Graph& g, const ForcingTrace& t);

}  // namespace zf
