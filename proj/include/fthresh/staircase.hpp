#ifndef FTHRESH_STAIRCASE_HPP
#define FTHRESH_STAIRCASE_HPP

#include <functional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace fthresh {

enum class RoundingMode { Floor, Ceil };

namespace detail {

// Minimal antichain of a monotone (upward-closed) subset of the integer box
// [0,corner]. `member` must be monotone: if it holds at w it holds at every
// w' >= w. Scanning in lexicographic order visits all componentwise-smaller
// vectors first, so any accepted point is automatically minimal.
inline std::set<IntVec> minimal_points_in_box(
    const IntVec& corner, const std::function<bool(const IntVec&)>& member) {
    std::set<IntVec> minimal;
    IntVec w(corner.size(), 0);
    for (;;) {
        bool dominated = false;
        for (const auto& g : minimal)
            if (dominates(w, g)) { dominated = true; break; }
        if (!dominated && member(w)) minimal.insert(w);
        // next vector in lexicographic order
        std::size_t i = corner.size();
        while (i > 0) {
            --i;
            if (w[i] < corner[i]) { ++w[i]; break; }
            w[i] = 0;
            if (i == 0) return minimal;
        }
        if (corner.empty()) return minimal;
    }
}

}  // namespace detail

/// Floor mode: minimal w (componentwise order) with some v in P satisfying
/// lambda*v_k < w_k + h_k for all k. Ceil mode (lambda = s, h = 0): minimal w
/// with some v in P satisfying s*v_k <= w_k for all k.
inline std::set<IntVec> staircase_antichain(const Polytope& P, const Rational& lambda,
                                            const IntVec& offsets, RoundingMode mode) {
    if (lambda < 0) throw InvalidParameter("staircase_antichain: negative lambda");
    if (offsets.size() != P.dim) throw DimensionMismatch("staircase_antichain: offsets length");
    if (P.generators.empty()) throw EmptyPointSet("staircase_antichain: empty polytope");
    for (int h : offsets) {
        if (mode == RoundingMode::Floor && h < 1)
            throw InvalidParameter("staircase_antichain: Floor offsets must be >= 1");
        if (mode == RoundingMode::Ceil && h != 0)
            throw InvalidParameter("staircase_antichain: Ceil offsets must be 0");
    }
    if (lambda == 0) return {IntVec(P.dim, 0)};

    // Enumeration corner: anything beyond it is dominated by a boxed vector.
    IntVec corner(P.dim, 0);
    for (std::size_t k = 0; k < P.dim; ++k) {
        Rational mk = P.generators[0][k];
        for (const auto& g : P.generators) mk = std::max(mk, g[k]);
        if (mk < 0) mk = 0;
        Int bk = (mode == RoundingMode::Floor) ? rat_floor(lambda * mk) + 1
                                               : rat_ceil(lambda * mk);
        corner[k] = bk < 0 ? 0 : static_cast<int>(to_long(bk));
    }

    auto member = [&](const IntVec& w) {
        RationalVector bound(P.dim);
        for (std::size_t k = 0; k < P.dim; ++k)
            bound[k] = Rational(w[k] + offsets[k]) / lambda;
        return feasible_box(P, bound,
                            mode == RoundingMode::Floor ? BoxMode::Strict : BoxMode::Weak);
    };
    return detail::minimal_points_in_box(corner, member);
}

}

#endif
