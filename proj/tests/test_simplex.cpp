#include "doctest.h"
#include "stringcone/simplex.hpp"

using namespace stringcone;

namespace {
Vec vec_of(const std::vector<int>& v) {
    Vec r;
    for (int x : v) r.emplace_back(x);
    return r;
}

// 0 <= x_i <= 1 for i < dim
LpProblem cube(int dim) {
    LpProblem p;
    p.dim = dim;
    for (int i = 0; i < dim; ++i) {
        Vec e(dim, Rat(0));
        e[i] = 1;
        p.add(e, Rat(0));  // x_i >= 0
        Vec f(dim, Rat(0));
        f[i] = -1;
        p.add(f, Rat(1));  // 1 - x_i >= 0
    }
    return p;
}
}  // namespace

TEST_CASE("maximize over a cube") {
    LpResult r = lp_maximize(cube(3), vec_of({1, 1, 1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 3);
    CHECK(r.point == vec_of({1, 1, 1}));
    LpResult s = lp_maximize(cube(3), vec_of({-2, 1, 0}));
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == 1);
    CHECK(s.point[0] == 0);
    CHECK(s.point[1] == 1);
}

TEST_CASE("unbounded and infeasible problems") {
    LpProblem p;
    p.dim = 2;
    p.add(vec_of({1, 0}), Rat(0));
    p.add(vec_of({0, 1}), Rat(0));
    CHECK(lp_maximize(p, vec_of({1, 1})).status == LpStatus::Unbounded);
    CHECK(lp_maximize(p, vec_of({-1, -1})).status == LpStatus::Optimal);

    LpProblem q = cube(2);
    q.add(vec_of({1, 1}), Rat(-3));  // x + y >= 3 cannot meet the cube
    CHECK(lp_maximize(q, vec_of({1, 0})).status == LpStatus::Infeasible);
}

TEST_CASE("equality constraints") {
    LpProblem p = cube(3);
    p.add_eq(vec_of({1, 1, 1}), Rat(-1));  // x + y + z = 1
    LpResult r = lp_maximize(p, vec_of({0, 0, 1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 1);
    CHECK(r.point == vec_of({0, 0, 1}));
}

TEST_CASE("degenerate vertices do not cycle") {
    // many redundant inequalities tight at the optimum
    LpProblem p = cube(3);
    p.add(vec_of({-1, -1, 0}), Rat(2));
    p.add(vec_of({-1, 0, -1}), Rat(2));
    p.add(vec_of({0, -1, -1}), Rat(2));
    p.add(vec_of({-1, -1, -1}), Rat(3));
    LpResult r = lp_maximize(p, vec_of({1, 1, 1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 3);
}

TEST_CASE("rational data stays exact") {
    LpProblem p;
    p.dim = 1;
    p.add({Rat(3)}, Rat(-1));       // 3x >= 1
    p.add({Rat(-7)}, Rat(3));       // 7x <= 3
    LpResult r = lp_maximize(p, {Rat(1)});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(3, 7));
    LpResult s = lp_maximize(p, {Rat(-1)});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.point[0] == Rat(1, 3));

    LpProblem q = p;
    q.add({Rat(-7)}, Rat(2));  // 7x <= 2 squeezes the window shut
    CHECK(lp_maximize(q, {Rat(1)}).status == LpStatus::Infeasible);
}
