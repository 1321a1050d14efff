#include "zeroforce/bounds.hpp"

#include <array>

namespace zf {

long long girth_degree_bound(int delta, int g) {
    if (delta < 2 || g < 3) throw DomainError("girth_degree_bound needs delta >= 2, g >= 3");
    return delta + static_cast<long long>(delta - 2) * (g - 3);
}

BoundVerdict delta_bound(const Graph& g, int forcing_number) {
    int delta = degree_stats(g).delta;
    return {"delta", delta, forcing_number >= delta ? Verdict::kHolds : Verdict::kFails,
            Provenance::kUnconditional};
}

BoundVerdict order_bound_check(const Graph& g) {
    DegreeStats stats = degree_stats(g);
    Girth gir = girth(g);
    if (stats.delta < 2 || !gir || *gir < 5)
        return {"order", 0, Verdict::kNotApplicable, Provenance::kUnconditional};
    long long need = static_cast<long long>(*gir) * (stats.delta - 1);
    return {"order", need, g.order() >= need ? Verdict::kHolds : Verdict::kFails,
            Provenance::kUnconditional};
}

long long mantel_max_edges(long long n) {
    if (n < 1) throw DomainError("mantel_max_edges needs n >= 1");
    return n * n / 4;
}

bool davila_kenter_threshold(int delta, int g) {
    if (g < 7 || delta < 2) throw DomainError("davila_kenter_threshold needs g >= 7, delta >= 2");
    const long long rhs = 12LL * (g + 1) * girth_degree_bound(delta, g);
    const int e = (g - 1) / 2 - 1;
    const unsigned long long base = static_cast<unsigned long long>(delta - 1);
    // rhs < 4e17 for all in-range inputs, so saturating there is safe.
    constexpr unsigned long long kSaturate = 400'000'000'000'000'000ULL;
    unsigned long long lhs = 1;
    for (int i = 0; i < e; ++i) {
        if (lhs >= kSaturate / base + 1) return true;
        lhs *= base;
        if (lhs >= kSaturate) return true;
    }
    return lhs >= static_cast<unsigned long long>(rhs);
}

int ex_c3c4(int n) {
    static constexpr std::array<int, 8> kTable{0, 1, 2, 3, 5, 6, 8, 10};
    if (n < 1 || n > 8) throw UnsupportedSizeError("ex_c3c4 table covers 1 <= n <= 8");
    return kTable[static_cast<std::size_t>(n - 1)];
}

}  // namespace zf
