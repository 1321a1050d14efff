#pragma once

#include <cstdint>
#include <optional>

#include "zeroforce/forcing.hpp"
#include "zeroforce/graph.hpp"

namespace zf {

enum class SolverStatus { kExact, kBounds };

// EXACT: lo = hi = F(G) and certificate is the lexicographically least
// minimum forcing set. BOUNDS: every size < lo was refuted before the budget
// ran out; hi and certificate come from the greedy minimal set.
struct ForcingNumberResult {
    SolverStatus status = SolverStatus::kBounds;
    int lo = 0;
    int hi = 0;
    std::optional<VertexSet> certificate;
    std::uint64_t explored = 0;  // closures evaluated, greedy pass included
};

inline constexpr std::uint64_t kDefaultSolverBudget = 10'000'000;

// Ascending-cardinality subset search starting at max(1, delta); delta is a
// valid start by the minimum-degree lower bound on F. The girth bound is
// never used for pruning: it is the claim under test. Subsets of each size
// are tried in lexicographic order, so the certificate is canonical. The
// budget caps search closures; the greedy fallback runs outside it.
ForcingNumberResult forcing_number_exact(const Graph& g,
                                         std::uint64_t budget = kDefaultSolverBudget);

// Drops vertices from V(G) in descending index order, keeping each drop that
// leaves a forcing set. Minimal, not necessarily minimum; deterministic.
VertexSet greedy_minimal_forcing_set(const Graph& g);

// Re-checks a solver certificate with closures only: s must force, and under
// claim_minimum no subset of V(G) one smaller may force.
bool verify_certificate(const Graph& g, const VertexSet& s, bool claim_minimum);

}  // namespace zf
