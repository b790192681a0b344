#pragma once

#include <string>
#include <vector>

#include "stringcone/gp_paths.hpp"
#include "stringcone/rational.hpp"
#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

namespace stringcone {

// Constant term kept symbolic in the highest weight: one + sum_i lambda[i-1] * lambda_i.
struct AffineConst {
    Rat one;
    Vec lambda;  // one slot per fundamental weight

    bool operator==(const AffineConst&) const = default;
};

// Affine functional  coeffs . t + cst  constrained to be >= 0.
struct LinearForm {
    Vec coeffs;
    AffineConst cst;

    bool operator==(const LinearForm&) const = default;
    std::string str(const std::string& var = "t") const;
};

LinearForm zero_form(int dim, int rank);

// Dominant integral weight (nonnegative integer coordinates).
struct Weight {
    std::vector<int> entries;
    int rank() const { return static_cast<int>(entries.size()); }
};
Weight parse_weight(const std::string& text);
bool is_regular(const Weight& w);

Rat instantiate(const AffineConst& c, const Weight& lam);

// One form  sum_j coeffs_j t_j >= 0  per rigorous path: +1 where the path
// switches to a higher wire, -1 where it switches to a lower one.  Ordered
// by level, then by the path order of enumerate_paths.
std::vector<LinearForm> string_cone(const ReducedWord& w);

// Upper-bound form of each node j:  lambda_{c_j} - t_j + sum_{k>j} a_k t_k >= 0
// with a_k = column_coupling(c_j, c_k).  Ordered by node id.
std::vector<LinearForm> lambda_cone(const ReducedWord& w);

// Concatenation string_cone + lambda_cone; cut out by the weight when
// instantiated downstream.
std::vector<LinearForm> string_polytope_forms(const ReducedWord& w);

// Rewrite a form over t into the chamber coordinates u of the word's basis.
LinearForm to_chamber_coordinates(const LinearForm& f, const ChamberBasis& basis);

// For words assembled purely by index-zero extensions (letters grouped in
// blocks of size 1, 2, ..., n): the upper-bound functional of the node in
// block k, slot j, without its weight constant.  Throws WordError when the
// word does not carry that block layout.
LinearForm lambda_functional(const ReducedWord& w, int k, int j);

// Recovers the extension side of every block of such a word (rank-1 block is
// reported as D).  Throws WordError if the word is not extension-built.
std::vector<Side> extension_layout(const ReducedWord& w);

}  // namespace stringcone
