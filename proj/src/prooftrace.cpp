#include "zeroforce/prooftrace.hpp"

namespace zf {

Decomposition decompose(const Graph& g, const ForcingTrace& trace, int L) {
    if (!is_valid_trace(g, trace)) throw DomainError("trace does not replay on this graph");
    if (L < 1 || static_cast<std::size_t>(L) > trace.steps.size())
        throw DomainError("window length out of range");

    const int n = g.order();
    Decomposition d;
    d.n = n;
    d.L = L;
    d.SXstar = VertexSet(n);
    d.initial = trace.initial;

    VertexSet window(n);
    VertexSet prefix(n);  // X_{<=i-1} while processing index i
    for (int i = 0; i < L; ++i) {
        int x = trace.steps[static_cast<std::size_t>(i)].first;
        d.X.push_back(x);
        window.set(x);

        VertexSet closed = g.neighbors(x);
        closed.set(x);
        d.Xi.push_back(closed);

        d.t.push_back(g.neighbors(x).intersection_count(prefix));
        int forced = trace.steps[static_cast<std::size_t>(i)].second;
        d.eps.push_back(prefix.test(forced) ? 0 : 1);

        VertexSet si = g.neighbors(x);
        si -= prefix;
        si &= trace.initial;
        d.Si.push_back(si);
        d.SXstar |= si;

        for (int j = 0; j < i; ++j)
            if (g.neighbors(x).intersects(d.Xi[static_cast<std::size_t>(j)]))
                d.arcs.emplace_back(i, j);

        prefix |= closed;
        d.Xle.push_back(prefix);
    }

    d.SX = trace.initial;
    d.SX -= d.SXstar;
    d.SX &= window;

    d.gd = Graph(L);
    for (auto [i, j] : d.arcs) d.gd.add_edge(i, j);
    return d;
}

ClaimReport check_claims(const Graph& g, const Decomposition& dec) {
    if (dec.n != g.order() || dec.L < 1) throw DomainError("decomposition does not match graph");
    for (int i = 0; i < dec.L; ++i) {
        VertexSet closed = g.neighbors(dec.X[static_cast<std::size_t>(i)]);
        closed.set(dec.X[static_cast<std::size_t>(i)]);
        if (closed != dec.Xi[static_cast<std::size_t>(i)])
            throw DomainError("decomposition does not match graph");
    }

    ClaimReport r;
    r.claim2a = dec.initial.count() >= dec.SX.count() + dec.SXstar.count();
    r.claim2b = dec.SX.test(dec.X[0]);

    Girth gir = girth(g);
    int delta = degree_stats(g).delta;
    r.claim2c_applicable = gir.has_value() && *gir >= 5;
    if (r.claim2c_applicable)
        r.claim2c_holds =
            dec.SXstar.count() >= static_cast<long long>(dec.L) * (delta - 1) - dec.mD();

    r.claim4a = true;
    for (int i = 0; i < dec.L; ++i) {
        int x = dec.X[static_cast<std::size_t>(i)];
        if (dec.initial.test(x)) continue;
        bool attached = false;
        for (int j = 0; j < i && !attached; ++j)
            attached = g.has_edge(x, dec.X[static_cast<std::size_t>(j)]);
        if (!attached) r.claim4a = false;
    }

    for (int i = 0; i < dec.L; ++i)
        r.accounting.push_back(g.degree(dec.X[static_cast<std::size_t>(i)]) ==
                               dec.t[static_cast<std::size_t>(i)] +
                                   dec.Si[static_cast<std::size_t>(i)].count() +
                                   dec.eps[static_cast<std::size_t>(i)]);

    Girth gd_girth = girth(dec.gd);
    r.gd_triangle_free = !(gd_girth.has_value() && *gd_girth == 3);
    return r;
}

}  // namespace zf
