#include "simplex.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bellkit::lp {
namespace {

// Internal standard form: min ct.x over Ax = b, x >= 0, b >= 0.
// Columns: structural vars (free originals split u - w), slacks, artificials.
struct Tableau {
    RatMat rows;       // m x (num_cols + 1), last entry is the rhs
    RatVec cost;       // reduced-cost row, num_cols + 1 (last = -objective value)
    std::vector<int> basis;  // per row, basic column
    int num_cols = 0;

    Rational& rhs(int i) { return rows[i].back(); }

    void pivot(int row, int col) {
        const Rational p = rows[row][col];
        assert(p != 0);
        for (auto& v : rows[row]) v /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == row || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col];
            for (int j = 0; j <= num_cols; ++j) rows[i][j] -= factor * rows[row][j];
        }
        if (cost[col] != 0) {
            const Rational factor = cost[col];
            for (int j = 0; j <= num_cols; ++j) cost[j] -= factor * rows[row][j];
        }
        basis[row] = col;
    }

    // Bland: entering = lowest-index eligible column with negative reduced
    // cost; leaving = ratio test, ties broken by lowest basic column.
    // Returns false when optimal, throws Unbounded via out-param col.
    bool step(const std::vector<bool>& eligible, int* unbounded_col) {
        int enter = -1;
        for (int j = 0; j < num_cols; ++j)
            if (eligible[j] && cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) return false;
        int leave = -1;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][enter] <= 0) continue;
            const Rational ratio = rhs(static_cast<int>(i)) / rows[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            *unbounded_col = enter;
            return false;
        }
        pivot(leave, enter);
        *unbounded_col = -1;
        return true;
    }
};

struct ColumnMap {
    // Original variable k maps to column pos[k] (and neg[k] if free/split).
    std::vector<int> pos, neg;
    int structural_cols = 0;  // split vars + slacks
    int slack_base = 0;
    int art_base = 0;
};

void verify_farkas(const Problem& p, const RatVec& y, const RatVec& z) {
    for (const auto& v : y)
        if (v < 0) throw std::logic_error("simplex: farkas ub multiplier negative");
    Rational rhs_combo = 0;
    for (std::size_t i = 0; i < y.size(); ++i) rhs_combo += y[i] * p.ub_rhs[i];
    for (std::size_t j = 0; j < z.size(); ++j) rhs_combo += z[j] * p.eq_rhs[j];
    if (rhs_combo >= 0) throw std::logic_error("simplex: farkas certificate fails on rhs");
    for (int k = 0; k < p.num_vars; ++k) {
        Rational col = 0;
        for (std::size_t i = 0; i < y.size(); ++i) col += y[i] * p.ub_rows[i][k];
        for (std::size_t j = 0; j < z.size(); ++j) col += z[j] * p.eq_rows[j][k];
        if (p.nonneg[k] ? col < 0 : col != 0)
            throw std::logic_error("simplex: farkas certificate fails on a column");
    }
}

void verify_ray(const Problem& p, const RatVec& r) {
    Rational obj = 0;
    for (int k = 0; k < p.num_vars; ++k) obj += p.objective[k] * r[k];
    if (obj <= 0) throw std::logic_error("simplex: ray does not improve the objective");
    for (std::size_t i = 0; i < p.ub_rows.size(); ++i)
        if (dot(p.ub_rows[i], r) > 0) throw std::logic_error("simplex: ray leaves an ub row");
    for (std::size_t j = 0; j < p.eq_rows.size(); ++j)
        if (dot(p.eq_rows[j], r) != 0) throw std::logic_error("simplex: ray leaves an eq row");
    for (int k = 0; k < p.num_vars; ++k)
        if (p.nonneg[k] && r[k] < 0) throw std::logic_error("simplex: ray negative on nonneg var");
}

}  // namespace

Solution solve(const Problem& p) {
    const int m = static_cast<int>(p.ub_rows.size() + p.eq_rows.size());

    ColumnMap cm;
    cm.pos.resize(p.num_vars);
    cm.neg.assign(p.num_vars, -1);
    int col = 0;
    for (int k = 0; k < p.num_vars; ++k) {
        cm.pos[k] = col++;
        if (!p.nonneg[k]) cm.neg[k] = col++;
    }
    cm.slack_base = col;
    col += static_cast<int>(p.ub_rows.size());
    cm.art_base = col;
    col += m;
    cm.structural_cols = cm.art_base;

    Tableau t;
    t.num_cols = col;
    t.basis.resize(m);
    t.rows.assign(m, RatVec(col + 1, Rational(0)));

    // Row signs are flipped as needed so every rhs is nonnegative; sign[i]
    // records the flip for mapping dual values back.
    std::vector<int> sign(m, 1);
    auto fill_row = [&](int i, const RatVec& a, const Rational& b, int slack) {
        RatVec& row = t.rows[i];
        for (int k = 0; k < p.num_vars; ++k) {
            row[cm.pos[k]] = a[k];
            if (cm.neg[k] >= 0) row[cm.neg[k]] = -a[k];
        }
        if (slack >= 0) row[cm.slack_base + slack] = 1;
        row.back() = b;
        if (b < 0) {
            sign[i] = -1;
            for (auto& v : row) v = -v;
        }
        row[cm.art_base + i] = 1;
        t.basis[i] = cm.art_base + i;
    };
    for (std::size_t i = 0; i < p.ub_rows.size(); ++i)
        fill_row(static_cast<int>(i), p.ub_rows[i], p.ub_rhs[i], static_cast<int>(i));
    for (std::size_t j = 0; j < p.eq_rows.size(); ++j)
        fill_row(static_cast<int>(p.ub_rows.size() + j), p.eq_rows[j], p.eq_rhs[j], -1);

    // Phase I: minimize the sum of artificials.
    t.cost.assign(col + 1, Rational(0));
    for (int i = 0; i < m; ++i) t.cost[cm.art_base + i] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= col; ++j) t.cost[j] -= t.rows[i][j];

    std::vector<bool> eligible(col, true);
    int unbounded_col = -1;
    while (t.step(eligible, &unbounded_col)) {
    }
    assert(unbounded_col < 0);  // phase I objective is bounded below by 0

    Solution sol;
    const Rational phase1 = -t.cost.back();
    if (phase1 > 0) {
        sol.status = Status::Infeasible;
        // Dual of phase I: for artificial column a_i the reduced cost is
        // 1 - y_i, so y_i = 1 - cost[a_i]; fold the row flips, then negate
        // to reach the documented orientation.
        sol.farkas_ub.assign(p.ub_rows.size(), Rational(0));
        sol.farkas_eq.assign(p.eq_rows.size(), Rational(0));
        for (int i = 0; i < m; ++i) {
            const Rational y = (Rational(1) - t.cost[cm.art_base + i]) * sign[i];
            if (i < static_cast<int>(p.ub_rows.size()))
                sol.farkas_ub[i] = -y;
            else
                sol.farkas_eq[i - p.ub_rows.size()] = -y;
        }
        verify_farkas(p, sol.farkas_ub, sol.farkas_eq);
        return sol;
    }

    // Drive leftover artificials out of the basis (they sit at value 0).
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < cm.art_base) continue;
        int piv = -1;
        for (int j = 0; j < cm.structural_cols; ++j)
            if (t.rows[i][j] != 0) {
                piv = j;
                break;
            }
        if (piv >= 0) t.pivot(i, piv);
        // else: redundant row; its artificial stays basic at 0 and the row
        // is inert for phase II.
    }
    for (int j = cm.art_base; j < col; ++j) eligible[j] = false;

    // Phase II: minimize -objective.
    t.cost.assign(col + 1, Rational(0));
    for (int k = 0; k < p.num_vars; ++k) {
        t.cost[cm.pos[k]] = -p.objective[k];
        if (cm.neg[k] >= 0) t.cost[cm.neg[k]] = p.objective[k];
    }
    for (int i = 0; i < m; ++i) {
        if (t.cost[t.basis[i]] == 0) continue;
        const Rational factor = t.cost[t.basis[i]];
        for (int j = 0; j <= col; ++j) t.cost[j] -= factor * t.rows[i][j];
    }
    while (t.step(eligible, &unbounded_col)) {
    }

    if (unbounded_col >= 0) {
        sol.status = Status::Unbounded;
        RatVec dir(col, Rational(0));
        dir[unbounded_col] = 1;
        for (int i = 0; i < m; ++i) dir[t.basis[i]] = -t.rows[i][unbounded_col];
        sol.ray.assign(p.num_vars, Rational(0));
        for (int k = 0; k < p.num_vars; ++k) {
            sol.ray[k] = dir[cm.pos[k]];
            if (cm.neg[k] >= 0) sol.ray[k] -= dir[cm.neg[k]];
        }
        verify_ray(p, sol.ray);
        return sol;
    }

    sol.status = Status::Optimal;
    RatVec full(col, Rational(0));
    for (int i = 0; i < m; ++i) full[t.basis[i]] = t.rhs(i);
    sol.x.assign(p.num_vars, Rational(0));
    for (int k = 0; k < p.num_vars; ++k) {
        sol.x[k] = full[cm.pos[k]];
        if (cm.neg[k] >= 0) sol.x[k] -= full[cm.neg[k]];
    }
    sol.value = 0;
    for (int k = 0; k < p.num_vars; ++k) sol.value += p.objective[k] * sol.x[k];
    return sol;
}

}  // namespace bellkit::lp
