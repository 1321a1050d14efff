#include "zeroforce/graph.hpp"

#include <limits>

namespace zf {

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    if (g.order() == 0) return s;
    s.delta = std::numeric_limits<int>::max();
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d < s.delta) s.delta = d;
        if (d > s.Delta) s.Delta = d;
    }
    s.m = g.size();
    return s;
}

// Per-root BFS. For any edge (u,w) seen from u with w already discovered and
// w not u's BFS parent, dist[u]+dist[w]+1 bounds a cycle through the root;
// the minimum over all roots is exactly the girth.
Girth girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        queue[0] = root;
        int head = 0, tail = 1;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
            const VertexSet& nb = g.neighbors(u);
            for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue[tail++] = w;
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (len < best) best = len;
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n);
        comp.set(s);
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const VertexSet& nb = g.neighbors(u);
            for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
                if (!comp.test(w)) {
                    comp.set(w);
                    stack.push_back(w);
                }
            }
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace zf
