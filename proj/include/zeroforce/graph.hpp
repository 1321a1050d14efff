#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zeroforce/bitset.hpp"
#include "zeroforce/errors.hpp"

namespace zf {

// Simple undirected graph on vertices 0..n-1 with one neighbor bit-row per
// vertex. Rows stay symmetric and loop-free by construction. Graphs are
// treated as immutable once built; all operations on them are const and safe
// to run from many threads at once.
class Graph {
public:
    explicit Graph(int n) : adj_(check_order(n), VertexSet(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return static_cast<int>(adj_.size()); }
    std::int64_t size() const { return m_; }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw ConstructionError("edge endpoint out of range");
        if (u == v) throw ConstructionError("loops are not allowed");
        if (adj_[static_cast<std::size_t>(u)].test(v)) return;
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
        ++m_;
    }

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    // u < v pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < order(); ++u)
            for (int v = adj_[static_cast<std::size_t>(u)].find_next(u); v >= 0;
                 v = adj_[static_cast<std::size_t>(u)].find_next(v))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n) {
        if (n < 0) throw ConstructionError("negative vertex count");
        return n;
    }

    std::vector<VertexSet> adj_;
    std::int64_t m_ = 0;
};

struct DegreeStats {
    int delta = 0;  // minimum degree
    int Delta = 0;  // maximum degree
    std::int64_t m = 0;

    bool operator==(const DegreeStats&) const = default;
};

// Length of a shortest cycle; nullopt for acyclic graphs.
using Girth = std::optional<int>;

DegreeStats degree_stats(const Graph& g);
Girth girth(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

}  // namespace zf
