#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "stringcone/words.hpp"

using namespace stringcone;

TEST_CASE("parsing and printing round-trip") {
    ReducedWord w = parse_word("2,1,3,2,3,1");
    CHECK(w.rank == 3);
    CHECK(w.length() == 6);
    CHECK(w.str() == "2,1,3,2,3,1");
    CHECK(w == make_word({2, 1, 3, 2, 3, 1}));
    CHECK_THROWS_AS(parse_word("1,x,2"), WordError);
    CHECK_THROWS_AS(make_word({1, 1}), WordError);       // not reduced
    CHECK_THROWS_AS(make_word({1, 2}), WordError);       // too short for any rank
    CHECK_THROWS_AS(make_word({1, 2, 1}, 3), WordError); // wrong length for rank 3
}

TEST_CASE("every word multiplies out to the order-reversing permutation") {
    for (const auto& w : enumerate_reduced_words(3)) {
        auto p = evaluate(w.letters, w.rank);
        REQUIRE(p.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(p[i] == 4 - i);
    }
}

TEST_CASE("enumeration counts for small ranks") {
    CHECK(enumerate_reduced_words(1).size() == 1);
    CHECK(enumerate_reduced_words(2).size() == 2);
    CHECK(enumerate_reduced_words(3).size() == 16);
    CHECK(enumerate_reduced_words(4).size() == 768);
}

TEST_CASE("commutation classes partition the words") {
    auto words = enumerate_reduced_words(3);
    std::map<ReducedWord, std::size_t> class_of;
    std::set<ReducedWord> reps;
    for (const auto& w : words) {
        CommutationClass cls = commutation_class(w);
        CHECK(cls.canonical == canonical_rep(w));
        CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
        CHECK(std::binary_search(cls.members.begin(), cls.members.end(), w));
        CHECK(cls.canonical == cls.members.front());  // lex-min representative
        class_of[cls.canonical] += 0;
        reps.insert(cls.canonical);
        for (const auto& m : cls.members) CHECK(canonical_rep(m) == cls.canonical);
    }
    CHECK(reps.size() == 8);
    std::size_t total = 0;
    for (const auto& r : reps) total += commutation_class(r).size();
    CHECK(total == 16);
}

TEST_CASE("rank-4 classes") {
    auto words = enumerate_reduced_words(4);
    std::set<ReducedWord> reps;
    for (const auto& w : words) reps.insert(canonical_rep(w));
    CHECK(reps.size() == 62);
}

TEST_CASE("elementary moves") {
    ReducedWord w = make_word({2, 1, 3, 2, 3, 1});
    // letters 3 and 1 at positions 5,6 commute
    CHECK(two_move(w, 5) == make_word({2, 1, 3, 2, 1, 3}));
    CHECK_THROWS_AS(two_move(w, 3), MoveError);  // 3,2 do not commute
    ReducedWord braid = make_word({1, 2, 1, 3, 2, 1});
    CHECK(three_move(braid, 1) == make_word({2, 1, 2, 3, 2, 1}));
    CHECK_THROWS_AS(three_move(braid, 2), MoveError);
    // a two-move never leaves the commutation class
    for (const auto& v : enumerate_reduced_words(3))
        for (int p = 1; p < v.length(); ++p) {
            if (std::abs(v.letters[p - 1] - v.letters[p]) < 2) continue;
            CHECK(canonical_rep(two_move(v, p)) == canonical_rep(v));
        }
    CHECK(two_move_equivalent(w, make_word({2, 1, 3, 2, 1, 3})));
    CHECK_FALSE(two_move_equivalent(w, braid));
}

TEST_CASE("normal form splits off a boundary block") {
    for (const auto& w : enumerate_reduced_words(3)) {
        for (Side side : {Side::D, Side::A}) {
            NormalForm nf = normal_form(w, side);
            CHECK(nf.block_nodes.size() == 3);  // the boundary wire crosses rank others
            CHECK(static_cast<int>(nf.prefix.size() + nf.suffix.size()) + 3 == w.length());
            CHECK(static_cast<int>(nf.suffix.size()) == ind(w, side));
        }
        Indices ix = indices(w);
        CHECK(ix.ind_D + ix.coind_D == w.length() - w.rank);
        CHECK(ix.ind_A + ix.coind_A == w.length() - w.rank);
    }
}

TEST_CASE("contraction then extension restores the class") {
    for (int rank : {3, 4}) {
        for (const auto& w : enumerate_reduced_words(rank)) {
            for (Side side : {Side::D, Side::A}) {
                Contraction ct = contract(w, side);
                CHECK(ct.word.rank == rank - 1);
                CHECK(ct.ind == ind(w, side));
                ReducedWord back = extend(ct.word, side, ct.ind);
                CHECK(two_move_equivalent(back, w));
                // extension then contraction is exactly the identity
                CHECK(contract(back, side).word == ct.word);
                CHECK(ind(back, side) == ct.ind);
            }
        }
    }
}

TEST_CASE("mirror swaps the two boundary wires") {
    for (const auto& w : enumerate_reduced_words(3)) {
        ReducedWord m = mirror(w);
        CHECK(mirror(m) == w);
        Indices a = indices(w), b = indices(m);
        CHECK(a.ind_D == b.ind_A);
        CHECK(a.ind_A == b.ind_D);
    }
}

TEST_CASE("index-zero extension chains") {
    auto sig = gc_type(make_word({1, 2, 1, 3, 2, 1}));
    REQUIRE(sig.has_value());
    CHECK(sig->size() == 3);
    for (Side s : *sig) CHECK(s == Side::D);
    CHECK_FALSE(gc_type(make_word({2, 1, 3, 2, 1, 3})).has_value());
    // a chain found for one member works for the whole class
    for (const auto& w : commutation_class(make_word({2, 3, 2, 1, 2, 3})).members)
        CHECK(gc_type(w).has_value());
}
