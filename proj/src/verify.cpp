#include "stringcone/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "stringcone/gc.hpp"
#include "stringcone/gp_paths.hpp"
#include "stringcone/inequalities.hpp"
#include "stringcone/linalg.hpp"
#include "stringcone/polyhedra.hpp"
#include "stringcone/rep_oracle.hpp"
#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

namespace {

struct Check {
    int done = 0;
    std::vector<std::string> fails;
    std::string note;

    void expect(bool ok, const std::string& what) {
        ++done;
        if (!ok && fails.size() < 6) fails.push_back(what);
    }
    bool pass() const { return fails.empty(); }
    std::string detail() const {
        if (pass()) {
            std::string d = std::to_string(done) + " checks";
            if (!note.empty()) d += "; " + note;
            return d;
        }
        std::string d;
        for (const auto& f : fails) {
            if (!d.empty()) d += " | ";
            d += f;
        }
        return d;
    }
};

Vec vec_of(const std::vector<int>& v) {
    Vec r;
    r.reserve(v.size());
    for (int x : v) r.emplace_back(x);
    return r;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

AffineConst ac_zero(int rank) { return AffineConst{Rat(0), Vec(rank, Rat(0))}; }

// The m-th weight coordinate as a symbolic constant.
AffineConst ac_weight(int m, int rank) {
    AffineConst c = ac_zero(rank);
    c.lambda[m - 1] = 1;
    return c;
}

// lambda_from + ... + lambda_rank.
AffineConst ac_tail(int from, int rank) {
    AffineConst c = ac_zero(rank);
    for (int m = from; m <= rank; ++m) c.lambda[m - 1] = 1;
    return c;
}

AffineConst ac_sub(const AffineConst& a, const AffineConst& b) {
    AffineConst c = a;
    c.one -= b.one;
    for (std::size_t i = 0; i < c.lambda.size(); ++i) c.lambda[i] -= b.lambda[i];
    return c;
}

LinearForm lf_sub(const LinearForm& a, const LinearForm& b) {
    LinearForm c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] -= b.coeffs[i];
    c.cst = ac_sub(c.cst, b.cst);
    return c;
}

bool same_vertex_set(std::vector<Vec> got, std::vector<Vec> want) {
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

// ---------------------------------------------------------------------------
// A1: the per-level inequality systems of two frozen rank-3 words.

void criterion_a1(Check& c) {
    struct LevelSet {
        int level;
        std::vector<std::vector<int>> forms;
    };
    auto run = [&](const std::vector<int>& letters, const std::vector<LevelSet>& want,
                   int total) {
        ReducedWord w = make_word(letters);
        WiringDiagram d = build_diagram(w);
        int seen = 0;
        for (const auto& ls : want) {
            auto paths = enumerate_paths(d, ls.level);
            std::vector<std::vector<int>> got;
            for (const auto& p : paths) got.push_back(p.coeffs);
            seen += static_cast<int>(got.size());
            auto expect_forms = ls.forms;
            std::sort(got.begin(), got.end());
            std::sort(expect_forms.begin(), expect_forms.end());
            c.expect(got == expect_forms,
                     w.str() + " level " + std::to_string(ls.level) + " system mismatch");
        }
        c.expect(seen == total && path_count(w) == total,
                 w.str() + " expected " + std::to_string(total) + " inequalities");
    };
    run({1, 2, 1, 3, 2, 1},
        {{1, {{1, 0, 0, 0, 0, 0}, {0, 1, -1, 0, 0, 0}, {0, 0, 0, 1, -1, 0}}},
         {2, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, -1}}},
         {3, {{0, 0, 0, 0, 0, 1}}}},
        6);
    run({2, 1, 3, 2, 3, 1},
        {{1, {{0, 0, 0, 0, 1, 0}}},
         {2,
          {{1, 0, 0, 0, 0, 0},
           {0, 1, 0, 0, -1, 0},
           {0, 0, 1, 0, 0, -1},
           {0, 1, 1, -1, 0, 0},
           {0, 0, 0, 1, -1, -1}}},
         {3, {{0, 0, 0, 0, 0, 1}}}},
        7);
}

// ---------------------------------------------------------------------------
// A2: the upper-bound system of (1,2,1,3,2,1), form by form.

void criterion_a2(Check& c) {
    ReducedWord w = make_word({1, 2, 1, 3, 2, 1});
    auto got = lambda_cone(w);
    struct Expect {
        std::vector<int> coeffs;
        int weight;
    };
    const std::vector<Expect> want = {
        {{-1, 1, -2, 0, 1, -2}, 1}, {{0, -1, 1, 1, -2, 1}, 2}, {{0, 0, -1, 0, 1, -2}, 1},
        {{0, 0, 0, -1, 1, 0}, 3},   {{0, 0, 0, 0, -1, 1}, 2},  {{0, 0, 0, 0, 0, -1}, 1},
    };
    c.expect(got.size() == want.size(), "expected six upper-bound forms");
    for (std::size_t j = 0; j < want.size() && j < got.size(); ++j) {
        LinearForm e{vec_of(want[j].coeffs), ac_weight(want[j].weight, 3)};
        c.expect(got[j] == e, "node " + std::to_string(j + 1) + " form mismatch");
    }
}

// ---------------------------------------------------------------------------
// A3: node-variable forms rewritten in the chamber basis of (2,1,3,2,3,1).

void criterion_a3(Check& c) {
    ReducedWord w = make_word({2, 1, 3, 2, 3, 1});
    ChamberBasis basis = chamber_basis(w);
    auto cone = string_cone(w);
    auto upper = lambda_cone(w);

    auto has_cone_form = [&](const std::vector<int>& coeffs) {
        Vec v = vec_of(coeffs);
        for (const auto& f : cone)
            if (f.coeffs == v) return true;
        return false;
    };
    c.expect(has_cone_form({1, 0, 0, 0, 0, 0}), "t1 >= 0 missing from the cone system");
    c.expect(has_cone_form({0, 1, 1, -1, 0, 0}), "t2+t3-t4 >= 0 missing from the cone system");

    auto rewrite = [&](const LinearForm& f) { return to_chamber_coordinates(f, basis); };

    LinearForm a{vec_of({1, 0, 0, 0, 0, 0}), ac_zero(3)};
    c.expect(rewrite(a) == LinearForm{vec_of({1, 1, 1, 1, 0, 0}), ac_zero(3)},
             "t1 does not rewrite to u1+u2+u3+u4");

    LinearForm b{vec_of({0, 1, 1, -1, 0, 0}), ac_zero(3)};
    c.expect(rewrite(b) == LinearForm{vec_of({0, 1, 1, 1, 0, 0}), ac_zero(3)},
             "t2+t3-t4 does not rewrite to u2+u3+u4");

    c.expect(upper[0] == LinearForm{vec_of({-1, 1, 1, -2, 1, 1}), ac_weight(2, 3)},
             "node-1 upper-bound form mismatch");
    c.expect(rewrite(upper[0]) == LinearForm{vec_of({-1, 0, 0, -1, 0, 0}), ac_weight(2, 3)},
             "node-1 form does not rewrite to lambda_2 - u1 - u4");

    c.expect(upper[2] == LinearForm{vec_of({0, 0, -1, 1, -2, 0}), ac_weight(3, 3)},
             "node-3 upper-bound form mismatch");
    c.expect(rewrite(upper[2]) == LinearForm{vec_of({0, 0, -1, 0, -1, 0}), ac_weight(3, 3)},
             "node-3 form does not rewrite to lambda_3 - u3 - u5");
}

// ---------------------------------------------------------------------------
// A4: a frozen contraction chain and two frozen index pairs.

void criterion_a4(Check& c) {
    ReducedWord w = make_word({2, 1, 4, 3, 5, 4, 2, 1, 3, 2, 5, 4, 3, 5, 1});
    c.expect(ind(w, Side::D) == 4, "rank-5 word should keep four letters below the last wire");

    const std::vector<std::vector<int>> chain = {
        {2, 1, 4, 3, 2, 1, 4, 3, 2, 4}, {2, 1, 3, 2, 1, 3}, {2, 1, 2}, {1}};
    ReducedWord cur = w;
    for (std::size_t step = 0; step < chain.size(); ++step) {
        cur = contract(cur, Side::D).word;
        c.expect(cur.letters == chain[step],
                 "contraction step " + std::to_string(step + 1) + " gave " + cur.str());
    }

    Indices i1 = indices(make_word({2, 1, 3, 2, 3, 1}));
    c.expect(i1.ind_A == 1 && i1.ind_D == 1, "(2,1,3,2,3,1) indices should be (1,1)");
    Indices i2 = indices(make_word({4, 3, 2, 1, 4, 2, 3, 2, 4, 3}));
    c.expect(i2.ind_A == 2 && i2.ind_D == 6,
             "(4,3,2,1,4,2,3,2,4,3) indices should be (2,6)");
}

// ---------------------------------------------------------------------------
// A5: distinguished boundary-wire paths of a frozen rank-4 word.

void criterion_a5(Check& c) {
    ReducedWord w = make_word({4, 3, 2, 1, 4, 2, 3, 2, 4, 3});
    WiringDiagram d = build_diagram(w);
    const std::vector<std::string> want = {
        "l4 -> l2 -> l1 -> l5", "l4 -> l2 -> l5", "l4 -> l3 -> l5", "l4 -> l5"};
    for (int k = 1; k <= 4; ++k) {
        RigorousPath p = canonical_path(d, Side::D, k);
        c.expect(is_rigorous(p, d), "level " + std::to_string(k) + " path is not valid");
        c.expect(p.wire_expr() == want[k - 1],
                 "level " + std::to_string(k) + " gave " + p.wire_expr());
    }
}

// ---------------------------------------------------------------------------
// A6: the full rank-3 classification, with every characterization agreeing.

void criterion_a6(Check& c) {
    Weight lam{{1, 1, 1}};
    auto rows = classify(3, lam, 2);  // throws on any internal incoherence
    c.expect(rows.size() == 8, "expected eight commutation classes");
    std::size_t total = 0;
    int gc_count = 0;
    for (const auto& r : rows) {
        total += r.class_size;
        c.expect(r.facets == r.path_count + 6,
                 r.canonical.str() + ": facet count must be path count plus six");
        c.expect(r.simplicial == (r.path_count == 6),
                 r.canonical.str() + ": simplicial flag disagrees with path count");
        c.expect(r.gc == r.simplicial, r.canonical.str() + ": map flag disagrees");
        c.expect(r.gc == (r.facets == 12), r.canonical.str() + ": facet characterization");
        c.expect(r.gc == !r.sigma.empty(), r.canonical.str() + ": sigma bookkeeping");
        if (r.gc) ++gc_count;
    }
    c.expect(total == 16, "class sizes must add up to sixteen words");

    auto find = [&](const std::vector<int>& letters) -> const ClassifyRow* {
        for (const auto& r : rows)
            if (r.canonical.letters == letters) return &r;
        return nullptr;
    };
    const ClassifyRow* std_row = find({1, 2, 1, 3, 2, 1});
    c.expect(std_row != nullptr, "standard word class missing");
    if (std_row) {
        c.expect(std_row->gc && std_row->sigma == "DDD",
                 "standard word class should carry the all-D chain");
        c.expect(std_row->path_count == 6 && std_row->facets == 12,
                 "standard word class counts mismatch");
    }
    const ClassifyRow* seven = find({2, 1, 3, 2, 1, 3});
    c.expect(seven != nullptr, "seven-path class missing");
    if (seven) {
        c.expect(!seven->gc && seven->path_count == 7 && seven->facets == 13,
                 "seven-path class should not admit the map");
    }
    c.note = std::to_string(gc_count) + " of 8 classes admit the map";
}

// ---------------------------------------------------------------------------
// A7: lattice counts agree with two independent dimension oracles.

void criterion_a7(Check& c) {
    struct Case {
        Weight lam;
        std::int64_t count;
    };
    const std::vector<Case> cases = {
        {Weight{{1, 1, 1}}, 64}, {Weight{{2, 1, 1}}, 140}, {Weight{{1, 2, 3}}, 630}};
    auto words = enumerate_reduced_words(3);
    c.expect(words.size() == 16, "rank 3 should have sixteen words");
    for (const auto& cs : cases) {
        Int want(cs.count);
        c.expect(weyl_dimension(3, cs.lam) == want, "dimension product oracle mismatch");
        c.expect(gt_pattern_count(3, cs.lam) == want, "interlacing-pattern oracle mismatch");
        for (const auto& w : words) {
            Int got = lattice_point_count(make_hpoly(string_polytope_forms(w), cs.lam));
            c.expect(got == want, w.str() + " counts " + got.str() + ", expected " +
                                      want.str());
        }
    }
}

// ---------------------------------------------------------------------------
// A8: rank-2 polytopes, the frozen block map, and exact volumes.

void criterion_a8(Check& c) {
    Weight lam{{2, 2}};

    auto gch = make_hpoly(gc_polytope(2), lam);
    auto gcv = vertex_enumeration(gch);
    const std::vector<std::vector<int>> gc_pts = {{4, 4, 2}, {2, 4, 2}, {4, 4, 0}, {0, 4, 0},
                                                  {2, 2, 0}, {0, 2, 0}, {2, 2, 2}};
    std::vector<Vec> gc_want;
    for (const auto& p : gc_pts) gc_want.push_back(vec_of(p));
    c.expect(gcv.bounded() && same_vertex_set(gcv.vertices, gc_want),
             "pattern polytope vertices mismatch");
    c.expect(volume(gch, gcv) == Rat(8), "pattern polytope volume should be 8");

    ReducedWord w121 = make_word({1, 2, 1});
    auto sh = make_hpoly(string_polytope_forms(w121), lam);
    auto sv = vertex_enumeration(sh);
    const std::vector<std::vector<int>> s_pts = {{0, 0, 0}, {2, 0, 0}, {4, 2, 0}, {2, 4, 2},
                                                 {0, 4, 2}, {0, 2, 2}, {0, 2, 0}};
    std::vector<Vec> s_want;
    for (const auto& p : s_pts) s_want.push_back(vec_of(p));
    c.expect(sv.bounded() && same_vertex_set(sv.vertices, s_want),
             "(1,2,1) polytope vertices mismatch");
    c.expect(volume(sh, sv) == Rat(8), "(1,2,1) polytope volume should be 8");
    c.expect(gc_map(w121, lam).verified, "(1,2,1) map fails the vertex comparison");

    // The frozen block map for sigma = (D,D,A) and its image formulas.
    auto sigma = parse_sigma("DDA");
    c.expect(sigma_word(sigma).letters == std::vector<int>({2, 3, 2, 1, 2, 3}),
             "sigma DDA should assemble (2,3,2,1,2,3)");
    AffineMap map = build_map(sigma);
    const std::vector<std::vector<int>> m_rows = {
        {-1, 0, -1, 1, -1, 0}, {0, 0, -1, 1, -1, 0}, {0, -1, 1, 0, 1, -1},
        {0, 0, 0, 1, -1, 0},   {0, 0, 0, 0, 1, -1},  {0, 0, 0, 0, 0, 1}};
    // Weight parts: rows carry lambda_2+lambda_3, lambda_2+lambda_3, lambda_3,
    // lambda_2+lambda_3, lambda_3, 0 respectively.
    const std::vector<std::vector<int>> v_rows = {{0, 1, 1}, {0, 1, 1}, {0, 0, 1},
                                                  {0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
    c.expect(map.m.size() == 6 && map.v.size() == 6, "block map has wrong shape");
    for (int r = 0; r < 6; ++r) {
        c.expect(map.m[r] == vec_of(m_rows[r]), "map row " + std::to_string(r + 1));
        AffineConst want{Rat(0), vec_of(v_rows[r])};
        c.expect(map.v[r] == want, "map shift " + std::to_string(r + 1));
    }

    // Spot-check the image formulas on an arbitrary rational point.
    ReducedWord w232 = make_word({2, 3, 2, 1, 2, 3});
    Weight lam3{{1, 1, 1}};
    GcMap g = gc_map(w232, lam3);
    c.expect(g.verified, "(2,3,2,1,2,3) map fails the vertex comparison");
    c.expect(sigma_str(g.sigma) == "DDA", "(2,3,2,1,2,3) should carry chain DDA");
    Vec t = {Rat(1), Rat(1, 2), Rat(1, 3), Rat(2), Rat(1), Rat(1, 5)};
    Vec x = gc_map_point(g, t, lam3);
    Rat l2(1), l3(1);
    Vec want_x = {
        -t[0] - t[2] + t[3] - t[4] + l2 + l3,  // x11
        -t[2] + t[3] - t[4] + l2 + l3,         // x21
        -t[1] + t[2] + t[4] - t[5] + l3,       // x22
        t[3] - t[4] + l2 + l3,                 // x31
        t[4] - t[5] + l3,                      // x32
        t[5],                                  // x33
    };
    c.expect(x == want_x, "image formulas disagree at a sample point");
}

// ---------------------------------------------------------------------------
// A9: the volume is an invariant of the rank, not of the word.

void criterion_a9(Check& c) {
    auto words = enumerate_reduced_words(3);
    struct Case {
        Weight lam;
        Rat vol;  // leading coefficient of the dimension polynomial
    };
    const std::vector<Case> cases = {{Weight{{1, 1, 1}}, Rat(1)}, {Weight{{2, 1, 1}}, Rat(4)}};
    for (const auto& cs : cases) {
        Rat gcvol = volume(make_hpoly(gc_polytope(3), cs.lam));
        c.expect(gcvol == cs.vol, "pattern polytope volume should be " + rat_str(cs.vol));
        for (const auto& w : words) {
            Rat v = volume(make_hpoly(string_polytope_forms(w), cs.lam));
            c.expect(v == gcvol, w.str() + " volume " + rat_str(v) + " != " + rat_str(gcvol));
        }
    }
}

// ---------------------------------------------------------------------------
// A10: the triangular-map recursions hold as exact linear-form identities
// for every extension sequence up to rank 4.

void criterion_a10(Check& c) {
    for (int n = 1; n <= 4; ++n) {
        const int N = n * (n + 1) / 2;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<Side> sigma(n);
            for (int k = 0; k < n; ++k) sigma[k] = (mask >> k) & 1 ? Side::A : Side::D;
            const std::string tag = sigma_str(sigma) + ": ";
            ReducedWord w = sigma_word(sigma);
            c.expect(w.length() == N, tag + "assembled word has wrong length");
            auto letter = [&](int k, int j) { return w.letters[flat_index(k, j) - 1]; };

            // Letter patterns between consecutive blocks.
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j < k; ++j) {
                    bool inc = letter(k, j) < letter(k, j + 1);
                    c.expect(inc == (sigma[k - 1] == Side::A),
                             tag + "block " + std::to_string(k) + " monotonicity");
                }
            for (int k = 1; k < n; ++k)
                for (int j = 1; j <= k; ++j) {
                    int up = sigma[k - 1] == sigma[k] ? letter(k + 1, j + 1)
                                                      : letter(k + 1, k - j + 2);
                    c.expect(up == letter(k, j), tag + "blocks " + std::to_string(k) + "," +
                                                     std::to_string(k + 1) + " letter link");
                }

            AffineMap map = build_map(sigma);

            // Weight differences along each block of the shift vector.
            auto lkj = [&](int k, int j) -> AffineConst {
                if (k == n + 1) return ac_weight(j, n);
                return ac_sub(map.v[flat_index(k, j) - 1], map.v[flat_index(k, j + 1) - 1]);
            };
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j < k; ++j) {
                    int m = sigma[k - 1] == Side::A ? letter(k, j + 1) : letter(k, k - j + 1);
                    c.expect(lkj(k, j) == ac_weight(m, n),
                             tag + "weight difference names the wrong letter");
                    AffineConst prev = sigma[k - 1] == Side::A ? lkj(k + 1, j + 1)
                                                               : lkj(k + 1, j);
                    c.expect(lkj(k, j) == prev, tag + "weight difference recursion");
                }

            // Upper-bound functionals obey the two-block recursion.
            std::vector<std::vector<Vec>> s(n + 1);
            for (int k = 1; k <= n; ++k) {
                s[k].resize(k + 1);
                for (int j = 1; j <= k; ++j) s[k][j] = lambda_functional(w, k, j).coeffs;
            }
            for (int j = 1; j <= n; ++j) {
                Vec want(N, Rat(0));
                want[flat_index(n, j) - 1] = -1;
                if (j < n) want[flat_index(n, j + 1) - 1] = 1;
                c.expect(s[n][j] == want, tag + "top-block functional shape");
            }
            for (int k = 1; k < n; ++k)
                for (int j = 1; j <= k; ++j) {
                    bool samepair = sigma[k - 1] == sigma[k];
                    Vec want = samepair ? s[k + 1][j + 1] : s[k + 1][k - j + 2];
                    want[flat_index(k, j) - 1] -= 1;
                    if (j + 1 <= k) want[flat_index(k, j + 1) - 1] += 1;
                    if (samepair) {
                        want[flat_index(k + 1, j) - 1] += 1;
                        want[flat_index(k + 1, j + 1) - 1] -= 1;
                    } else {
                        want[flat_index(k + 1, k - j + 1) - 1] += 1;
                        want[flat_index(k + 1, k - j + 2) - 1] -= 1;
                    }
                    c.expect(s[k][j] == want, tag + "functional recursion at (" +
                                                  std::to_string(k) + "," +
                                                  std::to_string(j) + ")");
                }

            // Rebuild the map rows by walking the triangle downward and
            // compare with the block construction.
            std::vector<std::vector<LinearForm>> x(n + 2);
            x[n + 1].resize(n + 2);
            for (int j = 1; j <= n + 1; ++j) {
                LinearForm f = zero_form(N, n);
                if (j <= n) f.cst = ac_tail(j, n);
                x[n + 1][j] = f;
            }
            for (int k = n; k >= 1; --k) {
                x[k].resize(k + 1);
                for (int j = 1; j <= k; ++j) {
                    LinearForm f;
                    if (sigma[k - 1] == Side::A) {
                        f = x[k + 1][j + 1];
                        f.coeffs[flat_index(k, j) - 1] += 1;
                        if (j + 1 <= k) f.coeffs[flat_index(k, j + 1) - 1] -= 1;
                    } else {
                        f = x[k + 1][j];
                        f.coeffs[flat_index(k, k - j + 1) - 1] -= 1;
                        if (k - j + 2 <= k) f.coeffs[flat_index(k, k - j + 2) - 1] += 1;
                    }
                    x[k][j] = f;
                }
            }
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= k; ++j) {
                    int r = flat_index(k, j) - 1;
                    c.expect(x[k][j].coeffs == map.m[r] && x[k][j].cst == map.v[r],
                             tag + "triangle walk disagrees with the block map at (" +
                                 std::to_string(k) + "," + std::to_string(j) + ")");
                }

            // Horizontal differences reduce to one functional plus a weight.
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j < k; ++j) {
                    LinearForm lhs = lf_sub(x[k][j], x[k][j + 1]);
                    LinearForm rhs = zero_form(N, n);
                    if (sigma[k - 1] == Side::A) {
                        rhs.coeffs[flat_index(k, j) - 1] += 1;
                        rhs.coeffs[flat_index(k, j + 1) - 1] -= 1;
                        rhs.coeffs = [&] {
                            Vec v = rhs.coeffs;
                            const Vec& sv = s[k][j + 1];
                            for (int q = 0; q < N; ++q) v[q] += sv[q];
                            return v;
                        }();
                        rhs.cst = lkj(k + 1, j + 1);
                    } else {
                        rhs.coeffs[flat_index(k, k - j) - 1] += 1;
                        rhs.coeffs[flat_index(k, k - j + 1) - 1] -= 1;
                        rhs.coeffs = [&] {
                            Vec v = rhs.coeffs;
                            const Vec& sv = s[k][k - j + 1];
                            for (int q = 0; q < N; ++q) v[q] += sv[q];
                            return v;
                        }();
                        rhs.cst = lkj(k + 1, j);
                    }
                    c.expect(lhs == rhs, tag + "horizontal difference at (" +
                                             std::to_string(k) + "," + std::to_string(j) +
                                             ")");
                }

            // Interlacing slacks are exactly the string and upper-bound slacks.
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= k; ++j) {
                    if (sigma[k - 1] == Side::A) {
                        LinearForm lhs = lf_sub(x[k + 1][j], x[k][j]);
                        LinearForm rhs = zero_form(N, n);
                        const Vec& sv = s[k][j];
                        for (int q = 0; q < N; ++q) rhs.coeffs[q] = sv[q];
                        rhs.cst = ac_weight(letter(k, j), n);
                        c.expect(lhs == rhs, tag + "upper slack at (" + std::to_string(k) +
                                                 "," + std::to_string(j) + ")");
                    } else {
                        LinearForm lhs = lf_sub(x[k][j], x[k + 1][j + 1]);
                        LinearForm rhs = zero_form(N, n);
                        const Vec& sv = s[k][k - j + 1];
                        for (int q = 0; q < N; ++q) rhs.coeffs[q] = sv[q];
                        rhs.cst = ac_weight(letter(k, k - j + 1), n);
                        c.expect(lhs == rhs, tag + "lower slack at (" + std::to_string(k) +
                                                 "," + std::to_string(j) + ")");
                    }
                }
        }
    }
}

// ---------------------------------------------------------------------------
// A11: contraction drops the inequality count by at least the rank.

void criterion_a11(Check& c) {
    for (int rank = 3; rank <= 4; ++rank) {
        auto words = enumerate_reduced_words(rank);
        for (const auto& w : words) {
            int base = path_count(w);
            Indices ix = indices(w);
            bool strict = false;
            for (Side side : {Side::D, Side::A}) {
                int inner = path_count(contract(w, side).word);
                c.expect(base >= inner + rank,
                         w.str() + ": count " + std::to_string(base) + " vs " +
                             std::to_string(inner) + " + " + std::to_string(rank));
                if (base > inner + rank) strict = true;
            }
            if (ix.ind_A > 0 && ix.ind_D > 0)
                c.expect(strict, w.str() + ": both indices positive but no strict drop");
        }
    }
}

// ---------------------------------------------------------------------------
// A12: a fifteen-dimensional system with a fractional vertex, twice the
// weight integral.  Enumeration gets a ten-minute budget; the randomized
// exact-LP probe is the fallback.

void criterion_a12(Check& c) {
    const auto budget = std::chrono::milliseconds(10 * 60 * 1000);
    const unsigned seed = 20240817u;
    ReducedWord w = make_word({1, 3, 2, 1, 3, 2, 4, 3, 2, 1, 5, 4, 3, 2, 1});
    Weight single{{0, 0, 1, 0, 0}}, doubled{{0, 0, 2, 0, 0}};
    auto h1 = make_hpoly(string_polytope_forms(w), single);
    auto h2 = make_hpoly(string_polytope_forms(w), doubled);

    bool enumerated = true;
    VRep v1;
    try {
        v1 = vertex_enumeration(h1, budget);
    } catch (const BudgetError&) {
        enumerated = false;
    }

    if (enumerated) {
        const Vec* frac = nullptr;
        for (const auto& v : v1.vertices) {
            bool integral = true;
            for (const auto& q : v) integral = integral && is_integer(q);
            if (!integral) {
                frac = &v;
                break;
            }
        }
        c.expect(frac != nullptr, "no fractional vertex among " +
                                      std::to_string(v1.vertices.size()) + " vertices");
        if (frac) c.note = "fractional vertex " + vec_str(*frac);
        bool doubled_ok = true;
        try {
            VRep v2 = vertex_enumeration(h2, budget);
            c.expect(is_integral(v2), "doubled weight still has a fractional vertex");
        } catch (const BudgetError&) {
            doubled_ok = false;
        }
        if (!doubled_ok) {
            auto probe = probe_fractional_vertex(h2, seed, 64);
            c.expect(!probe.has_value(),
                     "doubled weight: probe found a fractional vertex");
            c.note += "; doubled weight sampled by probes";
        }
    } else {
        auto probe = probe_fractional_vertex(h1, seed, 400);
        c.expect(probe.has_value(), "budget hit and the probe found no fractional vertex");
        if (probe) c.note = "probe found fractional vertex " + vec_str(*probe);
        auto probe2 = probe_fractional_vertex(h2, seed, 64);
        c.expect(!probe2.has_value(), "doubled weight: probe found a fractional vertex");
    }
}

// ---------------------------------------------------------------------------

struct Criterion {
    const char* id;
    const char* title;
    void (*fn)(Check&);
};

const Criterion kCriteria[] = {
    {"A1", "rank-3 level systems", criterion_a1},
    {"A2", "rank-3 upper-bound system", criterion_a2},
    {"A3", "chamber-coordinate rewrites", criterion_a3},
    {"A4", "contraction chain and indices", criterion_a4},
    {"A5", "boundary-wire path expressions", criterion_a5},
    {"A6", "rank-3 classification coherence", criterion_a6},
    {"A7", "lattice counts vs dimension oracles", criterion_a7},
    {"A8", "rank-2 polytopes and the block map", criterion_a8},
    {"A9", "volume invariance across rank-3 words", criterion_a9},
    {"A10", "triangular-map recursion identities", criterion_a10},
    {"A11", "path counts under contraction", criterion_a11},
    {"A12", "high-rank fractional vertex", criterion_a12},
};

constexpr int kQuickCount = 8;

}  // namespace

std::vector<std::string> criterion_ids(bool full) {
    std::vector<std::string> ids;
    int count = full ? static_cast<int>(std::size(kCriteria)) : kQuickCount;
    for (int i = 0; i < count; ++i) ids.push_back(kCriteria[i].id);
    return ids;
}

CriterionResult run_criterion(const std::string& id) {
    for (const auto& cr : kCriteria) {
        if (id != cr.id) continue;
        CriterionResult res;
        res.id = cr.id;
        res.title = cr.title;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.fn(check);
            res.pass = check.pass();
            res.detail = check.detail();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }
    throw std::invalid_argument("unknown criterion: " + id);
}

std::vector<CriterionResult> run_criteria(bool full) {
    std::vector<CriterionResult> out;
    for (const auto& id : criterion_ids(full)) out.push_back(run_criterion(id));
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
    os << std::string(r.id.size() < 3 ? 4 - r.id.size() : 1, ' ');
    os << r.title;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2f s)", r.seconds);
    os << buf;
    if (!r.detail.empty()) os << " -- " << r.detail;
    return os.str();
}

}  // namespace stringcone
