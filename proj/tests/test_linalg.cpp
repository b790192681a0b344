#include "doctest.h"
#include "stringcone/linalg.hpp"

using namespace stringcone;

namespace {
Vec vec_of(const std::vector<int>& v) {
    Vec r;
    for (int x : v) r.emplace_back(x);
    return r;
}
Mat mat_of(const std::vector<std::vector<int>>& rows) {
    Mat m;
    for (const auto& r : rows) m.push_back(vec_of(r));
    return m;
}
}  // namespace

TEST_CASE("determinant and inverse") {
    Mat m = mat_of({{0, 0, -1}, {0, -1, 1}, {-1, 1, 0}});
    CHECK(determinant(m) == 1);
    Mat inv = inverse(m);
    Mat prod = mat_mul(m, inv);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod[i][j] == Rat(i == j ? 1 : 0));
    Mat upper = mat_of({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
    CHECK(determinant(upper) == 1);
    CHECK(determinant(mat_of({{2, 0}, {0, 3}})) == 6);
}

TEST_CASE("rank computations") {
    CHECK(rank_of(mat_of({{1, 2}, {2, 4}, {0, 0}})) == 1);
    CHECK(rank_of(mat_of({{1, 0}, {0, 1}})) == 2);
    // three collinear points span a line: affine rank 1
    std::vector<Vec> pts = {vec_of({0, 0}), vec_of({1, 1}), vec_of({2, 2})};
    CHECK(affine_rank(pts) == 1);
    pts.push_back(vec_of({1, 0}));
    CHECK(affine_rank(pts) == 2);
    CHECK(affine_rank({vec_of({5, 7})}) == 0);
}

TEST_CASE("dot and matrix application") {
    CHECK(dot(vec_of({1, 2, 3}), vec_of({4, 5, 6})) == 32);
    Vec y = mat_vec(mat_of({{1, -1}, {0, 2}}), vec_of({3, 4}));
    CHECK(y == vec_of({-1, 8}));
}

TEST_CASE("primitive integer direction") {
    Vec v = {Rat(2, 3), Rat(4, 3)};
    CHECK(primitive(v) == vec_of({1, 2}));
    Vec w = {Rat(-4), Rat(6)};
    CHECK(primitive(w) == vec_of({-2, 3}));
}
