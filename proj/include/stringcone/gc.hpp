#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stringcone/inequalities.hpp"
#include "stringcone/linalg.hpp"
#include "stringcone/polyhedra.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

// Triangular-pattern polytope in coordinates x_{k,j} (1 <= j <= k <= rank),
// flattened block by block like the t coordinates; the fixed top row enters
// through the symbolic constants.  Exactly rank(rank+1) inequality forms.
std::vector<LinearForm> gc_polytope(int rank);

// Index of x_{k,j} (1-based blocks) in the flat coordinate order.
inline int flat_index(int k, int j) { return k * (k - 1) / 2 + j; }

// Word assembled by index-zero extensions along sigma, innermost first.
ReducedWord sigma_word(const std::vector<Side>& sigma);

// Affine map x = M t + v with weight-symbolic translation part.
struct AffineMap {
    Mat m;
    std::vector<AffineConst> v;
};

// The block-structured map attached to an extension sequence: the diagonal
// blocks are the one-step matrices, everything below grows by repeated
// first/last row deletion, and v collapses the top row the same way.
AffineMap build_map(const std::vector<Side>& sigma);

// Composition of 2-moves sending `from` to `to`; result[p] is the position
// in `to` of the node at position p of `from` (1-based, result[0] unused).
// Throws MoveError when the words are not 2-move equivalent.
std::vector<int> two_move_permutation(const ReducedWord& from, const ReducedWord& to);

struct GcMap {
    std::vector<Side> sigma;
    ReducedWord built;          // sigma_word(sigma)
    std::vector<int> perm;      // from w to built
    AffineMap map;              // on the built word's coordinates
    bool verified = false;      // image vertex set == pattern polytope vertex set
};

// Requires gc_type(w); verifies the unimodular identification on the given
// regular weight by exact vertex comparison.
GcMap gc_map(const ReducedWord& w, const Weight& lam);

// Apply a GcMap to points in the source word's coordinates.
Vec gc_map_point(const GcMap& g, const Vec& t, const Weight& lam);

struct ClassifyRow {
    ReducedWord canonical;
    std::size_t class_size = 0;
    int path_count = 0;
    int facets = 0;
    bool simplicial = false;
    bool gc = false;
    std::string sigma;  // e.g. "DDA", empty when !gc
};

// One row per commutation class, sorted by canonical word.  Asserts the
// coherence of the simplicial / facet-count / map characterizations on every
// class and throws std::logic_error on any mismatch.
std::vector<ClassifyRow> classify(int rank, const Weight& lam, int workers = 1);

std::string sigma_str(const std::vector<Side>& sigma);
std::vector<Side> parse_sigma(const std::string& text);

}  // namespace stringcone
