#pragma once

#include <json.hpp>

#include "zeroforce/forcing.hpp"
#include "zeroforce/prooftrace.hpp"
#include "zeroforce/solver.hpp"

namespace zf {

// ordered_json keeps insertion order, so every consumer sees the same key
// order and reports diff cleanly.
using Json = nlohmann::ordered_json;

// {"initial":[ints],"steps":[[forcer,forced],...]}
Json trace_to_json(const ForcingTrace& t);
// Rebuilds the trace (final included) for graph g; malformed shapes or
// out-of-range vertices raise ParseError. Replay validity is not enforced
// here; use is_valid_trace.
ForcingTrace trace_from_json(const Graph& g, const Json& j);

// {"status","lo","hi","certificate":[ints]|null,"explored"}
Json result_to_json(const ForcingNumberResult& r);

Json decomposition_to_json(const Decomposition& d, const ClaimReport& c);

}  // namespace zf
