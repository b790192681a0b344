#pragma once

#include <vector>

#include "stringcone/linalg.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

// Exact rational linear programs over free variables:
//   maximize c.x  subject to  rows[i].x + consts[i] >= 0.
// Bland's rule keeps the simplex finite; everything is mpq arithmetic.
enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status;
    Rat value;
    Vec point;  // a maximizer when status == Optimal
};

struct LpProblem {
    Mat rows;
    Vec consts;
    int dim = 0;

    void add(const Vec& row, const Rat& cst) {
        rows.push_back(row);
        consts.push_back(cst);
    }
    void add_eq(const Vec& row, const Rat& cst);  // two opposite inequalities
};

LpResult lp_maximize(const LpProblem& p, const Vec& objective);

}  // namespace stringcone
