#include <algorithm>
#include <set>

#include "doctest.h"
#include "stringcone/gc.hpp"
#include "stringcone/polyhedra.hpp"
#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

using namespace stringcone;

namespace {
Vec vec_of(const std::vector<int>& v) {
    Vec r;
    for (int x : v) r.emplace_back(x);
    return r;
}
}  // namespace

TEST_CASE("triangle indexing") {
    CHECK(flat_index(1, 1) == 1);
    CHECK(flat_index(2, 1) == 2);
    CHECK(flat_index(2, 2) == 3);
    CHECK(flat_index(3, 3) == 6);
}

TEST_CASE("interlacing system of rank 2") {
    auto forms = gc_polytope(2);
    CHECK(forms.size() == 6);  // two per triangle entry
    for (const auto& f : forms) {
        CHECK(f.coeffs.size() == 3);
        CHECK(f.cst.one == 0);
    }
    // x11 lies between the top entries: lam1+lam2 - x11 >= 0 and x11 - lam2 >= 0
    HPolyhedron h = make_hpoly(forms, Weight{{2, 2}});
    CHECK(h.contains(vec_of({2, 3, 1})));
    CHECK_FALSE(h.contains(vec_of({5, 3, 1})));
    CHECK_FALSE(h.contains(vec_of({2, 3, 3})));
}

TEST_CASE("sigma round trips") {
    CHECK(sigma_str(parse_sigma("DDA")) == "DDA");
    CHECK_THROWS_AS(parse_sigma("DXA"), WordError);
    CHECK(sigma_word(parse_sigma("DDD")) == make_word({1, 2, 1, 3, 2, 1}));
    CHECK(sigma_word(parse_sigma("DDA")) == make_word({2, 3, 2, 1, 2, 3}));
    CHECK(sigma_word(parse_sigma("D")) == make_word({1}));
}

TEST_CASE("single-step maps") {
    AffineMap a = build_map({Side::A});
    CHECK(a.m == Mat{vec_of({1})});
    CHECK(a.v[0].lambda == Vec{Rat(0)});
    AffineMap d = build_map({Side::D});
    CHECK(d.m == Mat{vec_of({-1})});
    CHECK(d.v[0].lambda == Vec{Rat(1)});
}

TEST_CASE("two-move renumbering tracks crossings") {
    ReducedWord from = make_word({2, 1, 3, 2, 3, 1});
    ReducedWord to = make_word({2, 1, 3, 2, 1, 3});
    auto perm = two_move_permutation(from, to);
    REQUIRE(perm.size() == 7);  // 1-based
    WiringDiagram df = build_diagram(from), dt = build_diagram(to);
    for (int j = 1; j <= 6; ++j) {
        auto p = df.pairs[j - 1];
        CHECK(dt.crossing(p[0], p[1]) == perm[j]);
    }
    CHECK(perm[5] == 6);
    CHECK(perm[6] == 5);
    CHECK_THROWS_AS(two_move_permutation(from, make_word({1, 2, 1, 3, 2, 1})),
                    MoveError);
}

TEST_CASE("the map exists exactly for one-system classes") {
    Weight lam{{1, 1, 1}};
    GcMap g = gc_map(make_word({1, 2, 1, 3, 2, 1}), lam);
    CHECK(g.verified);
    CHECK(sigma_str(g.sigma) == "DDD");
    CHECK_THROWS_AS(gc_map(make_word({2, 1, 3, 2, 1, 3}), lam), std::invalid_argument);
}

TEST_CASE("mapped points satisfy the interlacing system") {
    Weight lam{{2, 1, 2}};
    ReducedWord w = make_word({2, 3, 2, 1, 2, 3});
    GcMap g = gc_map(w, lam);
    REQUIRE(g.verified);
    HPolyhedron sp = make_hpoly(string_polytope_forms(w), lam);
    HPolyhedron gp = make_hpoly(gc_polytope(3), lam);
    VRep sv = vertex_enumeration(sp);
    for (const auto& t : sv.vertices) CHECK(gp.contains(gc_map_point(g, t, lam)));
}

TEST_CASE("classification table is deterministic across worker counts") {
    Weight lam{{1, 1, 1}};
    auto rows1 = classify(3, lam, 1);
    auto rows3 = classify(3, lam, 3);
    REQUIRE(rows1.size() == 8);
    REQUIRE(rows3.size() == 8);
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].canonical == rows3[i].canonical);
        CHECK(rows1[i].class_size == rows3[i].class_size);
        CHECK(rows1[i].path_count == rows3[i].path_count);
        CHECK(rows1[i].facets == rows3[i].facets);
        CHECK(rows1[i].simplicial == rows3[i].simplicial);
        CHECK(rows1[i].gc == rows3[i].gc);
        CHECK(rows1[i].sigma == rows3[i].sigma);
    }
    CHECK(std::is_sorted(rows1.begin(), rows1.end(),
                         [](const ClassifyRow& a, const ClassifyRow& b) {
                             return a.canonical < b.canonical;
                         }));
    CHECK_THROWS_AS(classify(3, Weight{{1, 0, 1}}, 1), std::invalid_argument);
}

TEST_CASE("rank-2 classification: both classes are simplicial") {
    auto rows = classify(2, Weight{{1, 1}}, 1);
    REQUIRE(rows.size() == 2);  // no commuting letters, so no merging
    for (const auto& r : rows) {
        CHECK(r.class_size == 1);
        CHECK(r.path_count == 3);
        CHECK(r.facets == 3 + 3);  // three cone rows plus one bound per node
        CHECK(r.simplicial);
        CHECK(r.gc);
    }
}
