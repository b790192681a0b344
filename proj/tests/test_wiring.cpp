#include <set>

#include "doctest.h"
#include "stringcone/linalg.hpp"
#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

using namespace stringcone;

TEST_CASE("diagram of (1,2,1): pairs and crossings") {
    WiringDiagram d = build_diagram(make_word({1, 2, 1}));
    CHECK(d.rank == 2);
    CHECK(d.wires() == 3);
    CHECK(d.size() == 3);
    CHECK(d.pairs[0] == std::array<int, 2>{1, 2});
    CHECK(d.pairs[1] == std::array<int, 2>{1, 3});
    CHECK(d.pairs[2] == std::array<int, 2>{2, 3});
    CHECK(d.crossing(1, 2) == 1);
    CHECK(d.crossing(2, 1) == 1);
    CHECK(d.crossing(1, 3) == 2);
    CHECK(d.crossing(2, 3) == 3);
}

TEST_CASE("every pair of wires crosses exactly once") {
    for (const auto& w : enumerate_reduced_words(4)) {
        WiringDiagram d = build_diagram(w);
        std::set<std::array<int, 2>> seen(d.pairs.begin(), d.pairs.end());
        CHECK(seen.size() == 10);
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b) {
                int j = d.crossing(a, b);
                CHECK(d.on_wire(j, a));
                CHECK(d.on_wire(j, b));
                CHECK(d.other_wire(j, a) == b);
            }
    }
}

TEST_CASE("itineraries are consistent") {
    WiringDiagram d = build_diagram(make_word({2, 1, 3, 2, 3, 1}));
    for (int m = 1; m <= d.wires(); ++m) {
        const auto& it = d.itinerary[m - 1];
        CHECK(it.size() == 3);
        for (std::size_t q = 0; q < it.size(); ++q) {
            CHECK(d.on_wire(it[q], m));
            CHECK(d.itinerary_pos(m, it[q]) == static_cast<int>(q));
        }
    }
}

TEST_CASE("nodes below a boundary wire match the index") {
    for (const auto& w : enumerate_reduced_words(3)) {
        WiringDiagram d = build_diagram(w);
        CHECK(static_cast<int>(nodes_below_wire(d, d.wires()).size()) == ind(w, Side::D));
        CHECK(static_cast<int>(nodes_below_wire(d, 1).size()) == ind(w, Side::A));
    }
}

TEST_CASE("column coupling coefficients") {
    CHECK(column_coupling(2, 2) == -2);
    CHECK(column_coupling(2, 3) == 1);
    CHECK(column_coupling(3, 2) == 1);
    CHECK(column_coupling(1, 3) == 0);
}

TEST_CASE("chamber basis is unimodular") {
    for (const auto& w : enumerate_reduced_words(3)) {
        ChamberBasis b = chamber_basis(w);
        Rat det = determinant(b.forward);
        CHECK((det == 1 || det == -1));
        Mat prod = mat_mul(b.forward, b.inverse);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) CHECK(prod[i][j] == Rat(i == j ? 1 : 0));
    }
}
