#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "stringcone/gc.hpp"
#include "stringcone/inequalities.hpp"
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

TEST_CASE("weights") {
    Weight lam = parse_weight("1,2,3");
    CHECK(lam.rank() == 3);
    CHECK(is_regular(lam));
    CHECK_FALSE(is_regular(Weight{{1, 0, 2}}));
    CHECK_FALSE(is_regular(Weight{{1, -1, 2}}));
    AffineConst c{Rat(5), vec_of({1, 0, 2})};
    CHECK(instantiate(c, lam) == Rat(5) + Rat(1) + Rat(6));
}

TEST_CASE("upper-bound system of the standard word") {
    auto forms = lambda_cone(make_word({1, 2, 1, 3, 2, 1}));
    REQUIRE(forms.size() == 6);
    CHECK(forms[0].coeffs == vec_of({-1, 1, -2, 0, 1, -2}));
    CHECK(forms[0].cst.lambda == vec_of({1, 0, 0}));
    CHECK(forms[3].coeffs == vec_of({0, 0, 0, -1, 1, 0}));
    CHECK(forms[3].cst.lambda == vec_of({0, 0, 1}));
    CHECK(forms[5].str("t") == "-t6 + L1");
    for (const auto& f : forms) CHECK(f.cst.one == 0);
}

TEST_CASE("cone systems are grouped by level") {
    for (const auto& w : enumerate_reduced_words(3)) {
        WiringDiagram d = build_diagram(w);
        auto cone = string_cone(w);
        std::size_t at = 0;
        for (int k = 1; k <= 3; ++k) {
            auto paths = enumerate_paths(d, k);
            for (const auto& p : paths) {
                REQUIRE(at < cone.size());
                CHECK(cone[at].coeffs == vec_of(p.coeffs));
                CHECK(cone[at].cst.one == 0);
                CHECK(cone[at].cst.lambda == Vec(3, Rat(0)));
                ++at;
            }
        }
        CHECK(at == cone.size());
        auto both = string_polytope_forms(w);
        CHECK(both.size() == cone.size() + 6);
    }
}

TEST_CASE("chamber rewrite has unit coefficients") {
    for (const auto& w : enumerate_reduced_words(3)) {
        ChamberBasis basis = chamber_basis(w);
        WiringDiagram d = build_diagram(w);

        // bottom-most node of each column, in left-to-right column order
        std::vector<int> bottom(4, 0);
        for (int j = 1; j <= 6; ++j) bottom[d.columns[j - 1]] = std::max(bottom[d.columns[j - 1]], j);

        for (int k = 1; k <= 3; ++k) {
            for (const auto& p : enumerate_paths(d, k)) {
                LinearForm f{vec_of(p.coeffs), AffineConst{Rat(0), Vec(3, Rat(0))}};
                LinearForm g = to_chamber_coordinates(f, basis);
                CHECK(g.cst.one == 0);
                for (const auto& q : g.coeffs) CHECK((q == 0 || q == 1));
                // the walk at level k always charges the bottom node of column rank+1-k
                CHECK(g.coeffs[bottom[4 - k] - 1] == 1);
                for (int m = 1; m <= 3; ++m)
                    if (m != k) CHECK(g.coeffs[bottom[4 - m] - 1] == 0);
            }
        }

        auto upper = lambda_cone(w);
        for (int j = 1; j <= 6; ++j) {
            LinearForm g = to_chamber_coordinates(upper[j - 1], basis);
            CHECK(g.cst == upper[j - 1].cst);
            for (int m = 1; m <= 6; ++m) {
                bool same_letter = w.letters[m - 1] == w.letters[j - 1] && m >= j;
                CHECK(g.coeffs[m - 1] == Rat(same_letter ? -1 : 0));
            }
        }
    }
}

TEST_CASE("assembled words carry staircase cone systems") {
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<Side> sigma = {mask & 1 ? Side::A : Side::D,
                                   mask & 2 ? Side::A : Side::D,
                                   mask & 4 ? Side::A : Side::D};
        ReducedWord w = sigma_word(sigma);
        WiringDiagram d = build_diagram(w);
        // one descending chain t_{base+1} >= ... >= t_{base+k} >= 0 per block
        std::set<std::vector<int>> want;
        for (int k = 1; k <= 3; ++k) {
            int base = k * (k - 1) / 2;
            for (int i = 1; i < k; ++i) {
                std::vector<int> f(6, 0);
                f[base + i - 1] = 1;
                f[base + i] = -1;
                want.insert(f);
            }
            std::vector<int> last(6, 0);
            last[base + k - 1] = 1;
            want.insert(last);
        }
        std::set<std::vector<int>> got;
        int total = 0;
        for (int k = 1; k <= 3; ++k)
            for (const auto& p : enumerate_paths(d, k)) {
                got.insert(p.coeffs);
                ++total;
            }
        CHECK(total == 6);  // one inequality per node: the cone is simplicial
        CHECK(got == want);
    }
}

TEST_CASE("extension layout recovers the assembly sequence") {
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Side> sigma = {Side::D,  // normalized first step
                                   mask & 2 ? Side::A : Side::D,
                                   mask & 4 ? Side::A : Side::D,
                                   mask & 8 ? Side::A : Side::D};
        CHECK(extension_layout(sigma_word(sigma)) == sigma);
    }
    CHECK_THROWS_AS(extension_layout(make_word({2, 1, 3, 2, 1, 3})), WordError);
}

TEST_CASE("node functionals agree with the upper-bound system") {
    std::vector<Side> sigma = {Side::D, Side::D, Side::A};
    ReducedWord w = sigma_word(sigma);
    auto upper = lambda_cone(w);
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= k; ++j) {
            int node = k * (k - 1) / 2 + j;
            LinearForm f = lambda_functional(w, k, j);
            CHECK(f.coeffs == upper[node - 1].coeffs);
            CHECK(f.cst.one == 0);
            CHECK(f.cst.lambda == Vec(3, Rat(0)));
        }
}
