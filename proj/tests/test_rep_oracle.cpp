#include "doctest.h"
#include "stringcone/inequalities.hpp"
#include "stringcone/rep_oracle.hpp"

using namespace stringcone;

TEST_CASE("frozen dimension values") {
    CHECK(weyl_dimension(3, Weight{{1, 1, 1}}) == 64);
    CHECK(weyl_dimension(3, Weight{{2, 1, 1}}) == 140);
    CHECK(weyl_dimension(3, Weight{{1, 2, 3}}) == 630);
    CHECK(weyl_dimension(1, Weight{{5}}) == 6);
    CHECK(weyl_dimension(2, Weight{{1, 1}}) == 8);
    CHECK(weyl_dimension(4, Weight{{1, 1, 1, 1}}) == 1024);
    CHECK(weyl_dimension(2, Weight{{0, 0}}) == 1);
}

TEST_CASE("the two oracles agree") {
    CHECK(gt_pattern_count(3, Weight{{1, 1, 1}}) == 64);
    CHECK(gt_pattern_count(4, Weight{{1, 1, 1, 1}}) == 1024);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 2; ++c) {
                Weight lam{{a, b, c}};
                CHECK(gt_pattern_count(3, lam) == weyl_dimension(3, lam));
            }
}

TEST_CASE("duality symmetry") {
    CHECK(weyl_dimension(3, Weight{{1, 2, 3}}) == weyl_dimension(3, Weight{{3, 2, 1}}));
    CHECK(weyl_dimension(4, Weight{{2, 0, 1, 3}}) == weyl_dimension(4, Weight{{3, 1, 0, 2}}));
}
