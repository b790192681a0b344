#include "stringcone/simplex.hpp"

#include <stdexcept>

namespace stringcone {

void LpProblem::add_eq(const Vec& row, const Rat& cst) {
    add(row, cst);
    Vec neg(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
    add(neg, -cst);
}

namespace {

// Full-tableau simplex over split nonnegative variables x = u - v, Bland's
// rule throughout.  Column layout: [u | v | slacks | x0], x0 the phase-1
// auxiliary, frozen after feasibility.  The objective row keeps the
// invariant  z = sum_j obj[j] x_j - obj[rhs]  so the current value is
// -obj[rhs] and positive reduced costs mark improving columns.
class Tableau {
  public:
    explicit Tableau(const LpProblem& p) : n_(p.dim), m_(static_cast<int>(p.rows.size())) {
        cols_ = 2 * n_ + m_ + 1;
        tab_.assign(m_, Vec(cols_ + 1, Rat(0)));
        basic_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            // rows[i].x + consts[i] >= 0  <=>  (-rows[i]).x <= consts[i]
            for (int j = 0; j < n_; ++j) {
                tab_[i][j] = -p.rows[i][j];
                tab_[i][n_ + j] = p.rows[i][j];
            }
            tab_[i][2 * n_ + i] = 1;
            tab_[i][x0()] = -1;
            tab_[i][cols_] = p.consts[i];
            basic_[i] = 2 * n_ + i;
        }
    }

    bool make_feasible() {
        int worst = -1;
        for (int i = 0; i < m_; ++i)
            if (tab_[i][cols_] < 0 && (worst < 0 || tab_[i][cols_] < tab_[worst][cols_]))
                worst = i;
        if (worst < 0) {
            phase2_ = true;
            return true;
        }
        obj_.assign(cols_ + 1, Rat(0));
        obj_[x0()] = -1;
        reprice();
        pivot(worst, x0());
        while (true) {
            int e = entering();
            if (e < 0) break;
            int r = leaving(e);
            if (r < 0) throw std::logic_error("phase 1 unbounded");
            pivot(r, e);
        }
        if (value() < 0) return false;
        for (int i = 0; i < m_; ++i) {
            if (basic_[i] != x0()) continue;
            for (int j = 0; j < x0(); ++j) {
                if (tab_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        phase2_ = true;
        return true;
    }

    // 0 = optimal, 1 = unbounded
    int maximize(const Vec& objective) {
        obj_.assign(cols_ + 1, Rat(0));
        for (int j = 0; j < n_; ++j) {
            obj_[j] = objective[j];
            obj_[n_ + j] = -objective[j];
        }
        reprice();
        while (true) {
            int e = entering();
            if (e < 0) return 0;
            int r = leaving(e);
            if (r < 0) return 1;
            pivot(r, e);
        }
    }

    Rat value() const { return -obj_[cols_]; }

    Vec point() const {
        Vec x(n_, Rat(0));
        for (int i = 0; i < m_; ++i) {
            if (basic_[i] < n_)
                x[basic_[i]] += tab_[i][cols_];
            else if (basic_[i] < 2 * n_)
                x[basic_[i] - n_] -= tab_[i][cols_];
        }
        return x;
    }

  private:
    int x0() const { return 2 * n_ + m_; }

    void reprice() {
        for (int i = 0; i < m_; ++i) {
            Rat c = obj_[basic_[i]];
            if (c == 0) continue;
            for (int j = 0; j <= cols_; ++j)
                if (tab_[i][j] != 0) obj_[j] -= c * tab_[i][j];
        }
    }

    int entering() const {
        for (int j = 0; j < cols_; ++j) {
            if (phase2_ && j == x0()) continue;
            if (obj_[j] > 0) return j;
        }
        return -1;
    }

    int leaving(int e) const {
        int r = -1;
        for (int i = 0; i < m_; ++i) {
            if (tab_[i][e] <= 0) continue;
            if (r < 0) {
                r = i;
                continue;
            }
            Rat cur = tab_[i][cols_] / tab_[i][e];
            Rat best = tab_[r][cols_] / tab_[r][e];
            if (cur < best || (cur == best && basic_[i] < basic_[r])) r = i;
        }
        return r;
    }

    void pivot(int r, int e) {
        Rat piv = tab_[r][e];
        if (piv == 0) throw std::logic_error("zero pivot");
        for (int j = 0; j <= cols_; ++j)
            if (tab_[r][j] != 0) tab_[r][j] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r || tab_[i][e] == 0) continue;
            Rat f = tab_[i][e];
            for (int j = 0; j <= cols_; ++j)
                if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
        }
        if (!obj_.empty() && obj_[e] != 0) {
            Rat f = obj_[e];
            for (int j = 0; j <= cols_; ++j)
                if (tab_[r][j] != 0) obj_[j] -= f * tab_[r][j];
        }
        basic_[r] = e;
    }

    int n_, m_, cols_;
    Mat tab_;
    Vec obj_;
    std::vector<int> basic_;
    bool phase2_ = false;
};

}  // namespace

LpResult lp_maximize(const LpProblem& p, const Vec& objective) {
    if (static_cast<int>(objective.size()) != p.dim)
        throw std::invalid_argument("objective dimension mismatch");
    Tableau t(p);
    if (!t.make_feasible()) return {LpStatus::Infeasible, Rat(0), {}};
    if (t.maximize(objective) == 1) return {LpStatus::Unbounded, Rat(0), {}};
    Vec x = t.point();
    Rat v = 0;
    for (int j = 0; j < p.dim; ++j) v += objective[j] * x[j];
    return {LpStatus::Optimal, v, x};
}

}  // namespace stringcone
