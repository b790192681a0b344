#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringcone {

// A reduced word for the longest element of the symmetric group on rank+1
// symbols.  letters[p] takes values in [1, rank]; positions are 1-based in
// all public interfaces so that letter p matches coordinate t_p.
struct ReducedWord {
    int rank = 0;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const ReducedWord&) const = default;
    bool operator<(const ReducedWord& o) const {
        if (rank != o.rank) return rank < o.rank;
        return letters < o.letters;
    }
    std::string str() const;  // "2,1,3,2,3,1"
};

struct WordError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MoveError : std::domain_error {
    using std::domain_error::domain_error;
};

// Validates and builds a word.  rank == 0 infers the rank from the largest
// letter.  Throws WordError unless the word has length rank(rank+1)/2 and
// multiplies out to the order-reversing permutation.
ReducedWord make_word(std::vector<int> letters, int rank = 0);
ReducedWord parse_word(const std::string& text, int rank = 0);

// One-line notation of s_{i1} ... s_{iN} acting on {1, ..., rank+1}.
std::vector<int> evaluate(const std::vector<int>& letters, int rank);

// All reduced words of the longest element, lexicographically sorted.
std::vector<ReducedWord> enumerate_reduced_words(int rank);

// Swap of commuting letters at positions p, p+1 (|difference| > 1).
ReducedWord two_move(const ReducedWord& w, int p);
// (i, j, i) -> (j, i, j) at positions p, p+1, p+2 (|i - j| == 1).
ReducedWord three_move(const ReducedWord& w, int p);

struct CommutationClass {
    ReducedWord canonical;              // lexicographic minimum
    std::vector<ReducedWord> members;   // lex-sorted
    std::size_t size() const { return members.size(); }
};
CommutationClass commutation_class(const ReducedWord& w);
ReducedWord canonical_rep(const ReducedWord& w);
bool two_move_equivalent(const ReducedWord& a, const ReducedWord& b);

// The two boundary wires that admit a contraction: D refers to the last wire
// (bottom-right corner of the diagram), A to the first.
enum class Side { D, A };
inline char side_char(Side s) { return s == Side::D ? 'D' : 'A'; }

// Result of sorting w by 2-moves into  prefix . block . suffix  where block
// is (n,...,1) for Side::D or (1,...,n) for Side::A, made of exactly the n
// crossings lying on the boundary wire.
struct NormalForm {
    std::vector<int> prefix;       // letter values, above the boundary wire
    std::vector<int> suffix;       // letter values, below the boundary wire
    std::vector<int> position;     // 1-based; node j of w sits at position[j]
    std::vector<int> block_nodes;  // original ids of the on-wire crossings, block order
};
NormalForm normal_form(const ReducedWord& w, Side side);

struct Indices {
    int ind_D = 0, coind_D = 0, ind_A = 0, coind_A = 0;
};
Indices indices(const ReducedWord& w);
int ind(const ReducedWord& w, Side side);

struct Contraction {
    ReducedWord word;  // rank one lower
    int ind = 0;
    // node id of w -> coordinate position in the contracted word; 0 for the
    // n deleted on-wire crossings.
    std::vector<int> node_map;
};
Contraction contract(const ReducedWord& w, Side side);

// Inserts a full block of crossings for one new wire, keeping the last s
// letters below it.  Raises the rank by one; ind(result, side) == s.
ReducedWord extend(const ReducedWord& w, Side side, int s);

// Letter involution i -> rank+1-i (the diagram mirrored left-right).
ReducedWord mirror(const ReducedWord& w);

// Searches for sigma in {D,A}^rank such that contracting by sigma_n, ...,
// sigma_1 in turn always happens at index zero.  Returns sigma with
// sigma[k-1] the choice at rank k (innermost last), or nullopt.  Ties are
// broken D before A, deepest-first.
std::optional<std::vector<Side>> gc_type(const ReducedWord& w);

}  // namespace stringcone
