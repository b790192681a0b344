#include "stringcone/rep_oracle.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace stringcone {

Int weyl_dimension(int rank, const Weight& lam) {
    if (lam.rank() != rank) throw std::invalid_argument("weight rank mismatch");
    Int num = 1, den = 1;
    for (int i = 1; i <= rank; ++i) {
        for (int j = i + 1; j <= rank + 1; ++j) {
            Int pairing = 0;
            for (int k = i; k < j; ++k) pairing += lam.entries[k - 1];
            num *= pairing + (j - i);
            den *= j - i;
        }
    }
    if (num % den != 0) throw std::logic_error("dimension product not integral");
    return num / den;
}

namespace {

using Row = std::vector<Int>;

// Count ways to complete a pattern downward from `row`: sum over all integer
// rows interlacing it from below, one entry shorter.
Int completions(const Row& row, std::map<Row, Int>& memo) {
    if (row.size() <= 1) return 1;
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;
    std::size_t m = row.size() - 1;
    Row next(m);
    Int total = 0;
    // Enumerate next[i] in [row[i+1], row[i]] recursively over positions.
    std::vector<Int> choice(m);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            for (std::size_t k = 0; k < m; ++k) next[k] = choice[k];
            total += completions(next, memo);
            return;
        }
        for (Int v = row[i + 1]; v <= row[i]; ++v) {
            choice[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    memo[row] = total;
    return total;
}

}  // namespace

Int gt_pattern_count(int rank, const Weight& lam) {
    if (lam.rank() != rank) throw std::invalid_argument("weight rank mismatch");
    Row top(rank + 1);
    top[rank] = 0;
    for (int j = rank - 1; j >= 0; --j) top[j] = top[j + 1] + lam.entries[j];
    std::map<Row, Int> memo;
    return completions(top, memo);
}

}  // namespace stringcone
