#pragma once

#include <array>
#include <vector>

#include "stringcone/rational.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

// Pseudoline arrangement of a reduced word.  rank+1 wires enter the bottom
// boundary left to right as l_1, ..., l_{rank+1}; node t_j (1-based, top to
// bottom, j-th letter of the word) is the crossing drawn in column
// letters[j-1], counted so that column c swaps the horizontal slots
// (rank+1-c, rank+2-c) when the diagram is scanned bottom-up.
struct WiringDiagram {
    int rank = 0;
    std::vector<int> columns;                  // columns[j-1] = letter of node j
    std::vector<std::array<int, 2>> pairs;     // wires meeting at node j (lower-left, lower-right)
    std::vector<std::vector<int>> itinerary;   // itinerary[m-1]: nodes on wire m, bottom to top
    std::vector<std::vector<int>> cross;       // cross[a][b] = node id where wires a, b meet

    int wires() const { return rank + 1; }
    int size() const { return static_cast<int>(columns.size()); }
    int crossing(int a, int b) const { return cross[a][b]; }
    // Position of node j along wire m counted from the bottom, 0-based.
    int itinerary_pos(int m, int j) const;
    bool on_wire(int j, int m) const { return pairs[j - 1][0] == m || pairs[j - 1][1] == m; }
    int other_wire(int j, int m) const {
        return pairs[j - 1][0] == m ? pairs[j - 1][1] : pairs[j - 1][0];
    }
};

WiringDiagram build_diagram(const ReducedWord& w);

// Nodes strictly below the given boundary wire (1 or rank+1): both wires of
// such a node cross the boundary wire at strictly smaller node ids.
std::vector<int> nodes_below_wire(const WiringDiagram& d, int wire);

// Coefficient of t_k in the upper-bound inequality of a node in column cj,
// for a later node in column ck: adjacent columns contribute +1, the same
// column -2, anything farther 0.
inline int column_coupling(int cj, int ck) {
    int diff = cj > ck ? cj - ck : ck - cj;
    if (diff == 1) return 1;
    if (diff == 0) return -2;
    return 0;
}

// Unimodular change of basis t -> u adapted to one-per-column telescoping:
// summing u over the nodes of one column at and below a node reproduces the
// node's upper-bound functional.
struct ChamberBasis {
    std::vector<Vec> forward;  // row j-1: u_j in the t coordinates
    std::vector<Vec> inverse;  // integer entries, det +-1
};
ChamberBasis chamber_basis(const ReducedWord& w);

}  // namespace stringcone
