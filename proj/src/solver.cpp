#include "zeroforce/solver.hpp"

#include <algorithm>

namespace zf {
namespace {

// Lexicographic k-subset cursor over 0..n-1.
struct SubsetCursor {
    SubsetCursor(int n, int k) : n_(n), idx_(static_cast<std::size_t>(k)) {
        for (int i = 0; i < k; ++i) idx_[static_cast<std::size_t>(i)] = i;
    }

    void fill(VertexSet& out) const {
        out.clear();
        for (int v : idx_) out.set(v);
    }

    bool advance() {
        int k = static_cast<int>(idx_.size());
        for (int i = k - 1; i >= 0; --i) {
            if (idx_[static_cast<std::size_t>(i)] < n_ - k + i) {
                int v = ++idx_[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j) idx_[static_cast<std::size_t>(j)] = ++v;
                return true;
            }
        }
        return false;
    }

    int n_;
    std::vector<int> idx_;
};

VertexSet greedy_minimal(const Graph& g, ClosureEngine& engine, std::uint64_t& explored) {
    VertexSet s = VertexSet::full(g.order());
    for (int v = g.order() - 1; v >= 0; --v) {
        s.reset(v);
        ++explored;
        if (!engine.forces_all(s)) s.set(v);
    }
    return s;
}

}  // namespace

ForcingNumberResult forcing_number_exact(const Graph& g, std::uint64_t budget) {
    if (g.order() < 1) throw DomainError("forcing number needs at least one vertex");
    if (budget == 0) throw DomainError("solver budget must be positive");

    const int n = g.order();
    ClosureEngine engine(g);
    ForcingNumberResult r;
    VertexSet greedy = greedy_minimal(g, engine, r.explored);

    const int start = std::max(1, degree_stats(g).delta);
    std::uint64_t searched = 0;
    VertexSet candidate(n);
    for (int k = start; k <= n; ++k) {
        SubsetCursor cursor(n, k);
        do {
            if (searched == budget) {
                r.status = SolverStatus::kBounds;
                r.lo = k;
                r.hi = greedy.count();
                r.certificate = std::move(greedy);
                return r;
            }
            cursor.fill(candidate);
            ++searched;
            ++r.explored;
            if (engine.forces_all(candidate)) {
                r.status = SolverStatus::kExact;
                r.lo = r.hi = k;
                r.certificate = std::move(candidate);
                return r;
            }
        } while (cursor.advance());
    }
    // Unreachable: V(G) itself always forces.
    r.status = SolverStatus::kBounds;
    r.lo = n;
    r.hi = greedy.count();
    r.certificate = std::move(greedy);
    return r;
}

VertexSet greedy_minimal_forcing_set(const Graph& g) {
    ClosureEngine engine(g);
    std::uint64_t ignored = 0;
    return greedy_minimal(g, engine, ignored);
}

bool verify_certificate(const Graph& g, const VertexSet& s, bool claim_minimum) {
    if (s.universe() != g.order()) throw DomainError("certificate universe mismatch");
    ClosureEngine engine(g);
    if (!engine.forces_all(s)) return false;
    if (!claim_minimum) return true;
    int k = s.count() - 1;
    if (k < 0) return true;
    VertexSet candidate(g.order());
    SubsetCursor cursor(g.order(), k);
    do {
        cursor.fill(candidate);
        if (engine.forces_all(candidate)) return false;
    } while (cursor.advance());
    return true;
}

}  // namespace zf
