#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "zeroforce/extremal.hpp"
#include "zeroforce/generators.hpp"
#include "zeroforce/isomorphism.hpp"

namespace {

bool has_witness_isomorphic_to(const zf::ExtremalResult& r, const zf::Graph& g) {
    for (const zf::Graph& w : r.witnesses)
        if (zf::is_isomorphic(w, g)) return true;
    return false;
}

}  // namespace

TEST_CASE("edge-maximal short-cycle-free graphs, tiny orders") {
    zf::ExtremalResult r1 = zf::max_c3c4_free(1);
    CHECK(r1.max_edges == 0);
    CHECK(r1.witnesses.size() == 1);
    CHECK(r1.explored > 0);

    zf::ExtremalResult r2 = zf::max_c3c4_free(2);
    CHECK(r2.max_edges == 1);
    CHECK(r2.witnesses.size() == 1);
    CHECK(has_witness_isomorphic_to(r2, zf::complete(2)));
}

TEST_CASE("five vertices: the five-cycle is the unique extremal graph") {
    zf::ExtremalResult r = zf::max_c3c4_free(5);
    CHECK(r.max_edges == 5);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(zf::is_isomorphic(r.witnesses[0], zf::cycle(5)));
    CHECK(zf::verify_extremal_uniqueness(5, zf::cycle(5)));
}

TEST_CASE("seven and eight vertices match the published extremal graphs") {
    zf::ExtremalResult r7 = zf::max_c3c4_free(7);
    CHECK(r7.max_edges == 8);
    REQUIRE(r7.witnesses.size() == 1);
    CHECK(zf::is_isomorphic(r7.witnesses[0], zf::g7()));

    zf::ExtremalResult r8 = zf::max_c3c4_free(8);
    CHECK(r8.max_edges == 10);
    REQUIRE(r8.witnesses.size() == 1);
    CHECK(zf::is_isomorphic(r8.witnesses[0], zf::g8()));

    CHECK(zf::verify_extremal_uniqueness(7, zf::g7()));
    CHECK(zf::verify_extremal_uniqueness(8, zf::g8()));
    CHECK(!zf::verify_extremal_uniqueness(7, zf::cycle(7)));  // right size, wrong graph
}

TEST_CASE("six vertices admit more than one extremal graph") {
    zf::ExtremalResult r = zf::max_c3c4_free(6);
    CHECK(r.max_edges == 6);
    CHECK(r.witnesses.size() > 1);
    CHECK(has_witness_isomorphic_to(r, zf::cycle(6)));
    CHECK(!zf::verify_extremal_uniqueness(6, zf::cycle(6)));
}

TEST_CASE("search agrees with the flat mask oracle") {
    for (int n = 1; n <= 6; ++n) {
        zf::ExtremalResult r = zf::max_c3c4_free(n);
        zftest::FlatExtremal oracle = zftest::max_c3c4_free_brute(n);
        CHECK(r.max_edges == oracle.max_edges);
        CHECK(static_cast<int>(r.witnesses.size()) == oracle.witness_classes);
    }
}

TEST_CASE("witnesses are well formed") {
    for (int n = 1; n <= 8; ++n) {
        zf::ExtremalResult r = zf::max_c3c4_free(n);
        for (std::size_t a = 0; a < r.witnesses.size(); ++a) {
            const zf::Graph& w = r.witnesses[a];
            CHECK(w.order() == n);
            CHECK(w.size() == r.max_edges);
            zf::Girth gir = zf::girth(w);
            CHECK((!gir || *gir >= 5));
            if (a > 0) CHECK(r.witnesses[a - 1].edges() < w.edges());  // sorted, no duplicates
            for (std::size_t b = a + 1; b < r.witnesses.size(); ++b)
                CHECK(!zf::is_isomorphic(w, r.witnesses[b]));
        }
    }
}

TEST_CASE("search is deterministic and bounded in order") {
    zf::ExtremalResult a = zf::max_c3c4_free(7);
    zf::ExtremalResult b = zf::max_c3c4_free(7);
    CHECK(a.max_edges == b.max_edges);
    CHECK(a.explored == b.explored);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i] == b.witnesses[i]);

    CHECK_THROWS_AS(zf::max_c3c4_free(0), zf::UnsupportedSizeError);
    CHECK_THROWS_AS(zf::max_c3c4_free(9), zf::UnsupportedSizeError);
    CHECK_THROWS_AS(zf::verify_extremal_uniqueness(9, zf::cycle(9)), zf::UnsupportedSizeError);
}
