#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "zeroforce/generators.hpp"
#include "zeroforce/isomorphism.hpp"
#include "zeroforce/solver.hpp"

namespace {

zf::VertexSet make_set(int n, std::initializer_list<int> members) {
    zf::VertexSet s(n);
    for (int v : members) s.set(v);
    return s;
}

// Reference forcing number: try every subset size from 1 up.
int forcing_number_brute(const zf::Graph& g) {
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            zf::VertexSet s(n);
            for (int v : idx) s.set(v);
            if (zf::is_forcing_set(g, s)) return k;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            int v = ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = ++v;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("frozen forcing numbers") {
    zf::ForcingNumberResult p7 = zf::forcing_number_exact(zf::path(7));
    CHECK(p7.status == zf::SolverStatus::kExact);
    CHECK(p7.lo == 1);
    CHECK(p7.certificate == make_set(7, {0}));

    zf::ForcingNumberResult k5 = zf::forcing_number_exact(zf::complete(5));
    CHECK(k5.lo == 4);

    zf::ForcingNumberResult c6 = zf::forcing_number_exact(zf::cycle(6));
    CHECK(c6.lo == 2);
    CHECK(c6.certificate == make_set(6, {0, 1}));

    zf::ForcingNumberResult pet = zf::forcing_number_exact(zf::petersen());
    CHECK(pet.status == zf::SolverStatus::kExact);
    CHECK(pet.lo == 5);
    CHECK(pet.certificate == make_set(10, {0, 1, 2, 3, 4}));
    // greedy pass (10) + all 3-subsets (120) + all 4-subsets (210) + first hit
    CHECK(pet.explored == 341);
}

TEST_CASE("certificate is the lexicographically least minimum forcing set") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        zf::Graph g = zftest::random_graph(n, 0.4, rng);
        zf::ForcingNumberResult r = zf::forcing_number_exact(g);
        REQUIRE(r.status == zf::SolverStatus::kExact);
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->count() == r.lo);
        CHECK(zf::is_forcing_set(g, *r.certificate));
        CHECK(r.lo == forcing_number_brute(g));
        // nothing lexicographically smaller of the same size forces
        std::vector<int> cert = r.certificate->to_vector();
        std::vector<int> idx(static_cast<std::size_t>(r.lo));
        for (int i = 0; i < r.lo; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (idx != cert) {
            zf::VertexSet s(n);
            for (int v : idx) s.set(v);
            CHECK(!zf::is_forcing_set(g, s));
            int i = r.lo - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r.lo + i) --i;
            REQUIRE(i >= 0);
            int v = ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r.lo; ++j) idx[static_cast<std::size_t>(j)] = ++v;
        }
    }
}

TEST_CASE("solver respects the minimum-degree start") {
    // F >= delta always; the solver must never report below it.
    std::mt19937 rng(37);
    for (int iter = 0; iter < 50; ++iter) {
        zf::Graph g = zftest::random_graph(7, 0.5, rng);
        zf::ForcingNumberResult r = zf::forcing_number_exact(g);
        CHECK(r.lo >= zf::degree_stats(g).delta);
    }
}

TEST_CASE("budget exhaustion yields honest bounds") {
    zf::Graph pet = zf::petersen();
    zf::ForcingNumberResult r = zf::forcing_number_exact(pet, 50);
    CHECK(r.status == zf::SolverStatus::kBounds);
    CHECK(r.lo == 3);  // not even the 3-subsets finished
    CHECK(r.hi == 5);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->count() == r.hi);
    CHECK(zf::is_forcing_set(pet, *r.certificate));
    CHECK(r.explored == 60);  // greedy 10 + 50 search closures

    zf::ForcingNumberResult mid = zf::forcing_number_exact(pet, 130);
    CHECK(mid.status == zf::SolverStatus::kBounds);
    CHECK(mid.lo == 4);  // all 120 3-subsets refuted, 4-subsets unfinished

    CHECK_THROWS_AS(zf::forcing_number_exact(pet, 0), zf::DomainError);
    CHECK_THROWS_AS(zf::forcing_number_exact(zf::Graph(0)), zf::DomainError);
}

TEST_CASE("greedy minimal forcing sets") {
    zf::VertexSet p3 = zf::greedy_minimal_forcing_set(zf::path(3));
    CHECK(p3.count() == 1);
    CHECK(zf::is_forcing_set(zf::path(3), p3));

    zf::VertexSet k4 = zf::greedy_minimal_forcing_set(zf::complete(4));
    CHECK(k4.count() == 3);

    zf::VertexSet c4 = zf::greedy_minimal_forcing_set(zf::cycle(4));
    CHECK(c4.count() == 2);

    // minimality: dropping any member breaks the forcing property
    std::mt19937 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        zf::Graph g = zftest::random_graph(n, 0.35, rng);
        zf::VertexSet s = zf::greedy_minimal_forcing_set(g);
        CHECK(zf::is_forcing_set(g, s));
        for (int v = s.find_first(); v >= 0; v = s.find_next(v)) {
            zf::VertexSet smaller = s;
            smaller.reset(v);
            CHECK(!zf::is_forcing_set(g, smaller));
        }
    }
}

TEST_CASE("certificate verification") {
    CHECK(zf::verify_certificate(zf::path(5), make_set(5, {0}), true));
    CHECK(!zf::verify_certificate(zf::cycle(5), make_set(5, {0}), false));
    CHECK(zf::verify_certificate(zf::cycle(5), make_set(5, {0, 1}), true));
    CHECK(!zf::verify_certificate(zf::cycle(5), make_set(5, {0, 1, 2}), true));  // not minimum
    zf::Graph pet = zf::petersen();
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c)
                for (int d = c + 1; d < 10; ++d)
                    CHECK(!zf::verify_certificate(pet, make_set(10, {a, b, c, d}), false));
}

TEST_CASE("forcing number adds over disjoint unions") {
    std::mt19937 rng(21);
    auto disjoint_union = [](const zf::Graph& a, const zf::Graph& b) {
        zf::Graph g(a.order() + b.order());
        for (auto [u, v] : a.edges()) g.add_edge(u, v);
        for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
        return g;
    };
    for (int iter = 0; iter < 40; ++iter) {
        zf::Graph a = zftest::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        zf::Graph b = zftest::random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        zf::ForcingNumberResult ra = zf::forcing_number_exact(a);
        zf::ForcingNumberResult rb = zf::forcing_number_exact(b);
        zf::ForcingNumberResult ru = zf::forcing_number_exact(disjoint_union(a, b));
        CHECK(ru.lo == ra.lo + rb.lo);
    }
}

TEST_CASE("complete graphs are the unique F = n-1 case up to order 5") {
    for (int n = 2; n <= 5; ++n)
        for (const zf::Graph& g : zftest::connected_classes(n)) {
            int f = zf::forcing_number_exact(g).lo;
            CHECK((f == n - 1) == zf::is_isomorphic(g, zf::complete(n)));
            bool path_like = zf::is_isomorphic(g, zf::path(n));
            CHECK((f == 1) == path_like);
        }
}
