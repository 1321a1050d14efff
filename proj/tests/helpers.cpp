#include "helpers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "zeroforce/isomorphism.hpp"

namespace zftest {
namespace {

void cycle_dfs(const zf::Graph& g, int anchor, int v, int length, std::vector<bool>& on_path,
               int& best) {
    if (length >= best) return;  // closing here or deeper cannot improve
    const zf::VertexSet& nb = g.neighbors(v);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
        if (w == anchor && length >= 3) {
            best = std::min(best, length);
            continue;
        }
        if (w <= anchor || on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = true;
        cycle_dfs(g, anchor, w, length + 1, on_path, best);
        on_path[static_cast<std::size_t>(w)] = false;
    }
}

}  // namespace

std::optional<int> girth_brute(const zf::Graph& g) {
    int best = g.order() + 1;
    std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
    for (int anchor = 0; anchor < g.order(); ++anchor) {
        on_path[static_cast<std::size_t>(anchor)] = true;
        cycle_dfs(g, anchor, anchor, 1, on_path, best);
        on_path[static_cast<std::size_t>(anchor)] = false;
    }
    if (best > g.order()) return std::nullopt;
    return best;
}

bool isomorphic_brute(const zf::Graph& a, const zf::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.has_edge(u, v) ==
                     b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

zf::Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
    zf::Graph g(n);
    std::bernoulli_distribution coin(edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

namespace {

// Degree sequence plus sorted neighbor-degree lists; a cheap bucket key so
// the permutation search only runs within small groups.
std::vector<std::vector<int>> class_key(const zf::Graph& g) {
    std::vector<std::vector<int>> key;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> row{g.degree(v)};
        const zf::VertexSet& nb = g.neighbors(v);
        for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) row.push_back(g.degree(w));
        std::sort(row.begin() + 1, row.end());
        key.push_back(std::move(row));
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

std::vector<zf::Graph> connected_classes(int n) {
    std::vector<zf::Graph> classes{zf::Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::map<std::vector<std::vector<int>>, std::vector<zf::Graph>> buckets;
        for (const zf::Graph& base : classes) {
            const std::uint32_t subsets = std::uint32_t{1} << (order - 1);
            for (std::uint32_t mask = 1; mask < subsets; ++mask) {
                zf::Graph h(order);
                for (auto [u, v] : base.edges()) h.add_edge(u, v);
                for (int v = 0; v < order - 1; ++v)
                    if (mask & (std::uint32_t{1} << v)) h.add_edge(order - 1, v);
                auto& bucket = buckets[class_key(h)];
                bool fresh = true;
                for (const zf::Graph& seen : bucket)
                    if (zf::is_isomorphic(seen, h)) {
                        fresh = false;
                        break;
                    }
                if (fresh) bucket.push_back(std::move(h));
            }
        }
        classes.clear();
        for (auto& [key, bucket] : buckets)
            for (zf::Graph& g : bucket) classes.push_back(std::move(g));
    }
    if (n < 1) classes.clear();
    return classes;
}

std::set<std::uint32_t> all_final_masks(const zf::Graph& g, std::uint32_t initial_mask) {
    const int n = g.order();
    std::set<std::uint32_t> seen, finals;
    std::vector<std::uint32_t> stack{initial_mask};
    seen.insert(initial_mask);
    while (!stack.empty()) {
        std::uint32_t mask = stack.back();
        stack.pop_back();
        bool moved = false;
        for (int v = 0; v < n; ++v) {
            if (!(mask & (std::uint32_t{1} << v))) continue;
            std::uint32_t uncolored_nb = 0;
            const zf::VertexSet& nb = g.neighbors(v);
            for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
                if (!(mask & (std::uint32_t{1} << w))) uncolored_nb |= std::uint32_t{1} << w;
            if (uncolored_nb == 0 || (uncolored_nb & (uncolored_nb - 1))) continue;
            moved = true;
            std::uint32_t next = mask | uncolored_nb;
            if (seen.insert(next).second) stack.push_back(next);
        }
        if (!moved) finals.insert(mask);
    }
    return finals;
}

FlatExtremal max_c3c4_free_brute(int n) {
    const int slots = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    FlatExtremal result;
    std::vector<zf::Graph> witnesses;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
        std::array<std::uint32_t, 6> adj{};
        int m = 0;
        for (int b = 0; b < slots; ++b) {
            if (!(mask & (std::uint32_t{1} << b))) continue;
            auto [u, v] = pairs[static_cast<std::size_t>(b)];
            adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
            ++m;
        }
        if (m < result.max_edges) continue;
        // C3: adjacent pair with a common neighbor. C4: any pair with two.
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                std::uint32_t common =
                    adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)];
                if (common & (common - 1)) ok = false;
                else if (common && (adj[static_cast<std::size_t>(u)] & (std::uint32_t{1} << v)))
                    ok = false;
            }
        if (!ok) continue;
        zf::Graph g(n);
        for (int b = 0; b < slots; ++b)
            if (mask & (std::uint32_t{1} << b))
                g.add_edge(pairs[static_cast<std::size_t>(b)].first,
                           pairs[static_cast<std::size_t>(b)].second);
        if (m > result.max_edges) {
            result.max_edges = m;
            witnesses.clear();
        }
        bool fresh = true;
        for (const zf::Graph& seen : witnesses)
            if (isomorphic_brute(seen, g)) {
                fresh = false;
                break;
            }
        if (fresh) witnesses.push_back(std::move(g));
    }
    result.witness_classes = static_cast<int>(witnesses.size());
    return result;
}

}  // namespace zftest
