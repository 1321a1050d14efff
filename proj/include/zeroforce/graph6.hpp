#pragma once

#include <string>
#include <string_view>

#include "zeroforce/graph.hpp"

namespace zf {

// graph6: printable encoding of a simple undirected graph. The order is one
// byte n+63 for n <= 62, or '~' followed by three bytes (6 bits each, most
// significant first) for 63 <= n <= 258047. Then ceil(n(n-1)/2 / 6) bytes of
// upper-triangle bits in column-major order x(0,1),x(0,2),x(1,2),x(0,3),...
// with zero padding. The optional ">>graph6<<" header is tolerated on input.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

inline constexpr int kGraph6MaxOrder = 258047;

// One "u v" pair per line, 0-indexed; blank lines and '#' comments ignored.
// The order is the largest endpoint + 1.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

}  // namespace zf
