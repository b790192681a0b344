#pragma once

#include <array>
#include <string>
#include <vector>

#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

// A walk through the oriented diagram at the given level: wires 1..level are
// oriented upward, the rest downward.  It starts at the bottom end of wire
// `level`, ends at the bottom end of wire level+1, visits every node at most
// once, and may ride straight over a same-oriented wire only from the
// lower-indexed wire when both run down (from the higher-indexed one when
// both run up); switching wires at a node is never restricted.
struct RigorousPath {
    int level = 0;
    std::vector<int> switches;                    // node ids in traversal order
    std::vector<std::array<int, 2>> switch_wires; // (from, to) per switch
    std::vector<int> wire_seq;                    // wires traversed, first = level
    std::vector<int> visited;                     // every node passed, traversal order
    std::vector<int> coeffs;                      // one entry per node: +1, -1 or 0

    std::string node_expr() const;  // "L2 -> t3 -> t4 -> t2 -> L3"
    std::string wire_expr() const;  // "l2 -> l4 -> l1 -> l3"
};

// All rigorous paths at one level, sorted lexicographically by switch list.
std::vector<RigorousPath> enumerate_paths(const WiringDiagram& d, int level);

// Total number of rigorous paths over all levels.
int path_count(const WiringDiagram& d);
int path_count(const ReducedWord& w);

// The distinguished path through the crossing of wire k (side D, k in
// [1, rank]) or wire k+1 (side A) with the boundary wire, built by greedy
// rerouting.  Its peak is that crossing and it stays below the boundary wire.
RigorousPath canonical_path(const WiringDiagram& d, Side side, int k);

// True when the path switches at a node lying on the boundary wire of the
// side (last wire for D, first for A).
bool is_new(const RigorousPath& p, const WiringDiagram& d, Side side);

// Validity check used by tests and by canonical_path's construction.
bool is_rigorous(const RigorousPath& p, const WiringDiagram& d);

}  // namespace stringcone
