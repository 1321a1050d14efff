#include "zeroforce/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace zf {
namespace {

// Degree plus sorted neighbor degrees; invariant under isomorphism.
std::vector<std::vector<int>> signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.push_back(g.degree(v));
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) s.push_back(g.degree(w));
        std::sort(s.begin() + 1, s.end());
    }
    return sig;
}

bool extend(const Graph& g, const Graph& h, const std::vector<int>& order,
            const std::vector<std::vector<int>>& sg, const std::vector<std::vector<int>>& sh,
            std::vector<int>& map, std::vector<bool>& used, std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (sg[static_cast<std::size_t>(v)] != sh[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < depth; ++j) {
            int u = order[j];
            if (g.has_edge(v, u) != h.has_edge(w, map[static_cast<std::size_t>(u)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = true;
        if (extend(g, h, order, sg, sh, map, used, depth + 1)) return true;
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
        throw UnsupportedSizeError("isomorphism search supports at most 12 vertices");
    const int n = g.order();
    if (n != h.order() || g.size() != h.size()) return false;
    if (n == 0) return true;

    auto sg = signatures(g), sh = signatures(h);
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    // Map vertices in an order that keeps each new one adjacent to mapped
    // ones where possible, so the consistency check bites early.
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    VertexSet mapped(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = g.neighbors(v).intersection_count(mapped);
            if (links > best_links) {
                best_links = links;
                pick = v;
            }
        }
        placed[static_cast<std::size_t>(pick)] = true;
        mapped.set(pick);
        order.push_back(pick);
    }

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    return extend(g, h, order, sg, sh, map, used, 0);
}

}  // namespace zf
