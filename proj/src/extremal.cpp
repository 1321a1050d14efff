#include "zeroforce/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "zeroforce/isomorphism.hpp"

namespace zf {
namespace {

struct Search {
    int n;
    std::vector<std::pair<int, int>> slots;  // all vertex pairs, lexicographic
    std::array<std::uint32_t, 8> adj{};
    std::vector<std::pair<int, int>> chosen;
    int best = -1;
    std::vector<Graph> witnesses;
    std::uint64_t explored = 0;

    explicit Search(int order) : n(order) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }

    // Adding uv closes a C3 iff u,v share a neighbor, and a C4 iff some
    // neighbor of u reaches v in two steps avoiding u.
    bool insertion_ok(int u, int v) const {
        if (adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]) return false;
        std::uint32_t au = adj[static_cast<std::size_t>(u)];
        while (au) {
            int a = std::countr_zero(au);
            au &= au - 1;
            if (adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(v)] &
                ~(std::uint32_t{1} << u))
                return false;
        }
        return true;
    }

    void record() {
        int m = static_cast<int>(chosen.size());
        if (m < best) return;
        Graph g = Graph::from_edges(n, chosen);
        if (m > best) {
            best = m;
            witnesses.clear();
            witnesses.push_back(std::move(g));
            return;
        }
        for (const Graph& w : witnesses)
            if (is_isomorphic(w, g)) return;
        witnesses.push_back(std::move(g));
    }

    void dfs(std::size_t pos) {
        ++explored;
        if (static_cast<int>(chosen.size() + (slots.size() - pos)) < best) return;
        if (pos == slots.size()) {
            record();
            return;
        }
        auto [u, v] = slots[pos];
        if (insertion_ok(u, v)) {
            adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
            chosen.push_back(slots[pos]);
            dfs(pos + 1);
            chosen.pop_back();
            adj[static_cast<std::size_t>(u)] &= ~(std::uint32_t{1} << v);
            adj[static_cast<std::size_t>(v)] &= ~(std::uint32_t{1} << u);
        }
        dfs(pos + 1);
    }
};

}  // namespace

ExtremalResult max_c3c4_free(int n) {
    if (n < 1 || n > kExtremalMaxOrder)
        throw UnsupportedSizeError("extremal search covers 1 <= n <= 8");
    Search s(n);
    s.dfs(0);
    std::sort(s.witnesses.begin(), s.witnesses.end(),
              [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
    return {n, s.best, std::move(s.witnesses), s.explored};
}

bool verify_extremal_uniqueness(int n, const Graph& expected) {
    ExtremalResult r = max_c3c4_free(n);
    return r.witnesses.size() == 1 && is_isomorphic(r.witnesses.front(), expected);
}

}  // namespace zf
