#include "zeroforce/forcing.hpp"

namespace zf {
namespace {

void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw DomainError("colored set universe does not match graph order");
}

}  // namespace

ClosureEngine::ClosureEngine(const Graph& g)
    : g_(&g),
      colored_(g.order()),
      uncolored_(g.order()),
      ready_(g.order()),
      pending_(static_cast<std::size_t>(g.order()), 0) {}

int ClosureEngine::run(const VertexSet& s) {
    const Graph& g = *g_;
    colored_ = s;
    uncolored_ = s.complement();
    ready_.clear();
    int ncolored = colored_.count();
    for (int v = colored_.find_first(); v >= 0; v = colored_.find_next(v)) {
        int p = g.neighbors(v).intersection_count(uncolored_);
        pending_[static_cast<std::size_t>(v)] = p;
        if (p == 1) ready_.set(v);
    }
    for (int v = ready_.find_first(); v >= 0; v = ready_.find_first()) {
        int u = g.neighbors(v).sole_common_element(uncolored_);
        colored_.set(u);
        uncolored_.reset(u);
        ++ncolored;
        // Every colored neighbor of u loses one pending vertex.
        const VertexSet& nb = g.neighbors(u);
        for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
            if (!colored_.test(w)) continue;
            int p = --pending_[static_cast<std::size_t>(w)];
            if (p == 1)
                ready_.set(w);
            else if (p == 0)
                ready_.reset(w);
        }
        int p = nb.intersection_count(uncolored_);
        pending_[static_cast<std::size_t>(u)] = p;
        if (p == 1) ready_.set(u);
    }
    return ncolored;
}

bool ClosureEngine::forces_all(const VertexSet& s) { return run(s) == g_->order(); }

VertexSet ClosureEngine::close(const VertexSet& s) {
    run(s);
    return colored_;
}

ForcingTrace closure(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    const int n = g.order();
    ForcingTrace t{s, {}, s};
    VertexSet uncolored = s.complement();
    VertexSet ready(n);
    std::vector<int> pending(static_cast<std::size_t>(n), 0);
    for (int v = t.final.find_first(); v >= 0; v = t.final.find_next(v)) {
        int p = g.neighbors(v).intersection_count(uncolored);
        pending[static_cast<std::size_t>(v)] = p;
        if (p == 1) ready.set(v);
    }
    for (int v = ready.find_first(); v >= 0; v = ready.find_first()) {
        int u = g.neighbors(v).sole_common_element(uncolored);
        t.steps.emplace_back(v, u);
        t.final.set(u);
        uncolored.reset(u);
        const VertexSet& nb = g.neighbors(u);
        for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
            if (!t.final.test(w)) continue;
            int p = --pending[static_cast<std::size_t>(w)];
            if (p == 1)
                ready.set(w);
            else if (p == 0)
                ready.reset(w);
        }
        int p = nb.intersection_count(uncolored);
        pending[static_cast<std::size_t>(u)] = p;
        if (p == 1) ready.set(u);
    }
    return t;
}

VertexSet closure_members(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    ClosureEngine engine(g);
    return engine.close(s);
}

bool is_forcing_set(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    ClosureEngine engine(g);
    return engine.forces_all(s);
}

bool is_valid_trace(const Graph& g, const ForcingTrace& t) {
    const int n = g.order();
    if (t.initial.universe() != n || t.final.universe() != n) return false;
    VertexSet colored = t.initial;
    VertexSet uncolored = colored.complement();
    for (auto [forcer, forced] : t.steps) {
        if (forcer < 0 || forcer >= n || forced < 0 || forced >= n) return false;
        if (!colored.test(forcer) || colored.test(forced)) return false;
        if (g.neighbors(forcer).sole_common_element(uncolored) != forced) return false;
        colored.set(forced);
        uncolored.reset(forced);
    }
    return colored == t.final;
}

}  // namespace zf
