#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "stringcone/gp_paths.hpp"
#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

using namespace stringcone;

TEST_CASE("level systems of the standard rank-3 word") {
    WiringDiagram d = build_diagram(make_word({1, 2, 1, 3, 2, 1}));
    CHECK(enumerate_paths(d, 1).size() == 3);
    CHECK(enumerate_paths(d, 2).size() == 2);
    CHECK(enumerate_paths(d, 3).size() == 1);
    CHECK(path_count(d) == 6);
}

TEST_CASE("printed forms of a level-2 path") {
    WiringDiagram d = build_diagram(make_word({2, 1, 3, 2, 3, 1}));
    auto paths = enumerate_paths(d, 2);
    CHECK(paths.size() == 5);
    std::set<std::string> nodes, wires;
    for (const auto& p : paths) {
        nodes.insert(p.node_expr());
        wires.insert(p.wire_expr());
    }
    CHECK(nodes.count("L2 -> t3 -> t4 -> t2 -> L3") == 1);
    CHECK(nodes.count("L2 -> L3") == 0);  // the trivial walk is never valid here
    for (const auto& s : wires) {
        CHECK(s.substr(0, 2) == "l2");
        CHECK(s.substr(s.size() - 2) == "l3");
    }
}

TEST_CASE("every enumerated path passes the validity predicate") {
    for (const auto& w : enumerate_reduced_words(3)) {
        WiringDiagram d = build_diagram(w);
        int total = 0;
        for (int k = 1; k <= 3; ++k) {
            auto paths = enumerate_paths(d, k);
            total += static_cast<int>(paths.size());
            for (const auto& p : paths) {
                CHECK(p.level == k);
                CHECK(is_rigorous(p, d));
                CHECK(p.coeffs.size() == 6);
                // one nonzero unit coefficient per switch, zero elsewhere
                std::set<int> sw(p.switches.begin(), p.switches.end());
                CHECK(sw.size() == p.switches.size());
                for (int j = 1; j <= 6; ++j) {
                    if (sw.count(j))
                        CHECK((p.coeffs[j - 1] == 1 || p.coeffs[j - 1] == -1));
                    else
                        CHECK(p.coeffs[j - 1] == 0);
                }
            }
        }
        CHECK(total == path_count(w));
        CHECK(total >= 6);  // at least one inequality per level triple
    }
}

TEST_CASE("distinguished paths hug the boundary wire") {
    for (const auto& w : enumerate_reduced_words(3)) {
        WiringDiagram d = build_diagram(w);
        for (Side side : {Side::D, Side::A}) {
            for (int k = 1; k <= 3; ++k) {
                RigorousPath p = canonical_path(d, side, k);
                CHECK(is_rigorous(p, d));
                CHECK(is_new(p, d, side));
            }
        }
        // with nothing below the last wire the distinguished walk is a tent
        if (ind(w, Side::D) == 0) {
            for (int k = 1; k <= 3; ++k) {
                RigorousPath p = canonical_path(d, Side::D, k);
                if (k < 3)
                    CHECK(p.wire_seq == std::vector<int>({k, 4, k + 1}));
                else
                    CHECK(p.wire_seq == std::vector<int>({3, 4}));
            }
        }
    }
}

TEST_CASE("paths that avoid the boundary inject into the contraction") {
    for (const auto& w : enumerate_reduced_words(4)) {
        WiringDiagram d = build_diagram(w);
        ReducedWord inner = contract(w, Side::D).word;
        WiringDiagram di = build_diagram(inner);
        for (int k = 1; k <= 3; ++k) {
            int avoiding = 0;
            for (const auto& p : enumerate_paths(d, k))
                if (!is_new(p, d, Side::D)) ++avoiding;
            CHECK(avoiding <= static_cast<int>(enumerate_paths(di, k).size()));
        }
        for (const auto& p : enumerate_paths(d, 4)) CHECK(is_new(p, d, Side::D));
    }
}
