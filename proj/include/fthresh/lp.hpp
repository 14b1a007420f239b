#ifndef FTHRESH_LP_HPP
#define FTHRESH_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace fthresh {

// Exact rational simplex (two-phase, Bland's rule). Instances here are tiny
// (a handful of variables and rows), so termination and exactness matter and
// speed does not.

enum class Rel { LessEq, GreaterEq, Eq };

struct LpRow {
    RationalVector coeffs;
    Rel rel;
    Rational rhs;
};

struct LpProblem {
    std::size_t num_vars = 0;
    RationalVector objective;   // minimized; empty means pure feasibility
    std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;             // objective at optimum
    RationalVector x;           // values of the original variables
};

namespace detail {

class SimplexTableau {
public:
    // rows: m constraint rows in equality form A x = b with b >= 0,
    // columns: n structural + slack + artificial, maintained dense.
    std::vector<RationalVector> a;  // m x n_total
    RationalVector b;               // m
    std::vector<std::size_t> basis; // m, column index of basic variable
    std::size_t n_total = 0;

    void pivot(std::size_t row, std::size_t col) {
        const Rational piv = a[row][col];
        for (auto& v : a[row]) v /= piv;
        b[row] /= piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row) continue;
            const Rational f = a[i][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n_total; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        basis[row] = col;
    }

    // Minimize cost over the current feasible basis. `allowed(j)` filters the
    // columns eligible to enter. Returns false on unboundedness.
    bool optimize(RationalVector& cost, Rational& z, auto allowed) {
        for (;;) {
            // reduced costs under Bland: pick the smallest eligible column
            std::size_t enter = n_total;
            for (std::size_t j = 0; j < n_total; ++j) {
                if (!allowed(j)) continue;
                if (cost[j] < 0) { enter = j; break; }
            }
            if (enter == n_total) return true;
            std::size_t leave = a.size();
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i][enter] <= 0) continue;
                if (leave == a.size()) { leave = i; continue; }
                const Rational lhs = b[i] * a[leave][enter];
                const Rational rhs = b[leave] * a[i][enter];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
            }
            if (leave == a.size()) return false;  // unbounded
            // keep the cost row in reduced form as we pivot
            pivot(leave, enter);
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < n_total; ++j) cost[j] -= f * a[leave][j];
            z -= f * b[leave];
        }
    }
};

}  // namespace detail

inline LpSolution solve_lp(const LpProblem& p) {
    const std::size_t n = p.num_vars;
    const std::size_t m = p.rows.size();
    for (const auto& r : p.rows)
        if (r.coeffs.size() != n) throw DimensionMismatch("solve_lp: row length");
    if (!p.objective.empty() && p.objective.size() != n)
        throw DimensionMismatch("solve_lp: objective length");

    // Equality form: one slack/surplus column per inequality row.
    std::size_t n_slack = 0;
    for (const auto& r : p.rows)
        if (r.rel != Rel::Eq) ++n_slack;
    const std::size_t n_art = m;
    detail::SimplexTableau t;
    t.n_total = n + n_slack + n_art;
    t.a.assign(m, RationalVector(t.n_total, Rational(0)));
    t.b.assign(m, Rational(0));
    t.basis.assign(m, 0);

    std::size_t slack_at = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& r = p.rows[i];
        Rational sign = 1;
        Rational rhs = r.rhs;
        // normalize to b >= 0
        bool flip = rhs < 0;
        if (flip) { sign = -1; rhs = -rhs; }
        for (std::size_t j = 0; j < n; ++j) t.a[i][j] = sign * r.coeffs[j];
        t.b[i] = rhs;
        if (r.rel != Rel::Eq) {
            Rational s = (r.rel == Rel::LessEq) ? Rational(1) : Rational(-1);
            t.a[i][slack_at++] = sign * s;
        }
        t.a[i][n + n_slack + i] = 1;
        t.basis[i] = n + n_slack + i;
    }

    auto structural = [&](std::size_t j) { return j < n + n_slack; };

    // Phase 1: minimize the sum of artificials.
    RationalVector cost1(t.n_total, Rational(0));
    Rational z1 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        // reduced cost of the artificial objective w.r.t. the artificial basis
        for (std::size_t j = 0; j < t.n_total; ++j) cost1[j] -= t.a[i][j];
        z1 -= t.b[i];
        cost1[n + n_slack + i] += 1;
    }
    if (!t.optimize(cost1, z1, structural))
        throw InternalError("solve_lp: phase 1 unbounded");
    if (z1 != 0) return {LpStatus::Infeasible, Rational(0), {}};

    // Drive any degenerate artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n + n_slack) continue;
        std::size_t col = t.n_total;
        for (std::size_t j = 0; j < n + n_slack; ++j)
            if (t.a[i][j] != 0) { col = j; break; }
        if (col != t.n_total) t.pivot(i, col);
        // else the row is identically zero over structural columns: redundant
    }

    // Phase 2.
    RationalVector cost2(t.n_total, Rational(0));
    Rational z2 = 0;
    if (!p.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j) cost2[j] = p.objective[j];
        for (std::size_t i = 0; i < m; ++i) {
            const Rational f = cost2[t.basis[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < t.n_total; ++j) cost2[j] -= f * t.a[i][j];
            z2 -= f * t.b[i];
        }
        auto allowed2 = [&](std::size_t j) {
            if (!structural(j)) return false;
            // a leftover artificial basis row blocks nothing; never re-enter artificials
            return true;
        };
        if (!t.optimize(cost2, z2, allowed2))
            return {LpStatus::Unbounded, Rational(0), {}};
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.value = -z2;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.b[i];
    return sol;
}

}

#endif
