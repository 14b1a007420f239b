#ifndef FTHRESH_POLYTOPE_HPP
#define FTHRESH_POLYTOPE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace fthresh {

/// V-representation: the polytope is the convex hull of `generators`.
/// After hull_normalize no generator lies in the hull of the others.
struct Polytope {
    std::size_t dim = 0;
    std::vector<RationalVector> generators;
};

enum class BoxMode { Strict, Weak };

namespace detail {

// Is `point` a convex combination of `points`?
inline bool in_hull(const RationalVector& point,
                    const std::vector<RationalVector>& points) {
    if (points.empty()) return false;
    const std::size_t dim = point.size();
    LpProblem lp;
    lp.num_vars = points.size();
    for (std::size_t k = 0; k < dim; ++k) {
        LpRow row;
        row.rel = Rel::Eq;
        row.rhs = point[k];
        for (const auto& g : points) row.coeffs.push_back(g[k]);
        lp.rows.push_back(std::move(row));
    }
    LpRow sum{RationalVector(points.size(), Rational(1)), Rel::Eq, Rational(1)};
    lp.rows.push_back(std::move(sum));
    return solve_lp(lp).status == LpStatus::Optimal;
}

}  // namespace detail

/// Unique minimal generator set with the same convex hull, in lexicographic order.
inline Polytope hull_normalize(std::vector<RationalVector> points) {
    if (points.empty()) throw EmptyPointSet("hull_normalize: empty point set");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw DimensionMismatch("hull_normalize: mixed lengths");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    // A point interior to the hull of the rest is never extreme; extreme points
    // survive any removal order, so one sweep with permanent removals is enough.
    std::vector<RationalVector> kept = points;
    for (const auto& p : points) {
        std::vector<RationalVector> others;
        for (const auto& q : kept)
            if (q != p) others.push_back(q);
        if (detail::in_hull(p, others)) kept = std::move(others);
    }
    return Polytope{dim, std::move(kept)};
}

/// Does some v in P satisfy v_k <= bound_k for all k (strictly in Strict mode)?
/// Strict feasibility is decided by maximizing the minimum slack and testing
/// that the optimum is positive.
inline bool feasible_box(const Polytope& P, const RationalVector& bound, BoxMode mode) {
    if (bound.size() != P.dim) throw DimensionMismatch("feasible_box: bound length");
    if (P.generators.empty()) throw EmptyPointSet("feasible_box: empty polytope");
    const std::size_t N = P.generators.size();
    if (mode == BoxMode::Weak) {
        LpProblem lp;
        lp.num_vars = N;
        for (std::size_t k = 0; k < P.dim; ++k) {
            LpRow row;
            row.rel = Rel::LessEq;
            row.rhs = bound[k];
            for (const auto& g : P.generators) row.coeffs.push_back(g[k]);
            lp.rows.push_back(std::move(row));
        }
        lp.rows.push_back({RationalVector(N, Rational(1)), Rel::Eq, Rational(1)});
        return solve_lp(lp).status == LpStatus::Optimal;
    }
    // Variables c_1..c_N, t+ , t-; maximize t = t+ - t- subject to
    // sum c_i g_ik + t <= bound_k.
    LpProblem lp;
    lp.num_vars = N + 2;
    lp.objective.assign(N + 2, Rational(0));
    lp.objective[N] = -1;  // minimize -t
    lp.objective[N + 1] = 1;
    for (std::size_t k = 0; k < P.dim; ++k) {
        LpRow row;
        row.rel = Rel::LessEq;
        row.rhs = bound[k];
        for (const auto& g : P.generators) row.coeffs.push_back(g[k]);
        row.coeffs.push_back(Rational(1));
        row.coeffs.push_back(Rational(-1));
        lp.rows.push_back(std::move(row));
    }
    {
        RationalVector sum(N + 2, Rational(0));
        for (std::size_t i = 0; i < N; ++i) sum[i] = 1;
        lp.rows.push_back({std::move(sum), Rel::Eq, Rational(1)});
    }
    auto sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw InternalError("feasible_box: slack LP not optimal");
    return -sol.value > 0;
}

/// min over v in P of max over { k : d_k > 0 } of v_k / d_k, exactly.
/// Coordinates with d_k = 0 demand v_k <= 0; if no v in P satisfies them the
/// result is +infinity, encoded as nullopt.
inline std::optional<Rational> min_max_ratio(const Polytope& P, const RationalVector& d) {
    if (d.size() != P.dim) throw DimensionMismatch("min_max_ratio: d length");
    if (P.generators.empty()) throw EmptyPointSet("min_max_ratio: empty polytope");
    for (const auto& dk : d)
        if (dk < 0) throw InvalidParameter("min_max_ratio: negative weight");
    bool any_positive = false;
    for (const auto& dk : d) any_positive = any_positive || dk > 0;
    if (!any_positive) return std::nullopt;
    const std::size_t N = P.generators.size();
    // Variables c_1..c_N, t+, t-; minimize t = t+ - t-.
    LpProblem lp;
    lp.num_vars = N + 2;
    lp.objective.assign(N + 2, Rational(0));
    lp.objective[N] = 1;
    lp.objective[N + 1] = -1;
    for (std::size_t k = 0; k < P.dim; ++k) {
        LpRow row;
        row.rel = Rel::LessEq;
        row.rhs = 0;
        for (const auto& g : P.generators) row.coeffs.push_back(g[k]);
        if (d[k] > 0) {
            row.coeffs.push_back(-d[k]);
            row.coeffs.push_back(d[k]);
        } else {
            row.coeffs.push_back(Rational(0));
            row.coeffs.push_back(Rational(0));
        }
        lp.rows.push_back(std::move(row));
    }
    {
        RationalVector sum(N + 2, Rational(0));
        for (std::size_t i = 0; i < N; ++i) sum[i] = 1;
        lp.rows.push_back({std::move(sum), Rel::Eq, Rational(1)});
    }
    auto sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) return std::nullopt;
    if (sol.status != LpStatus::Optimal)
        throw InternalError("min_max_ratio: unbounded LP");
    return sol.value;
}

}

#endif
