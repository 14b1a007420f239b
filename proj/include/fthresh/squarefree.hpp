#ifndef FTHRESH_SQUAREFREE_HPP
#define FTHRESH_SQUAREFREE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "errors.hpp"

namespace fthresh {

/// Squarefree monomial ideal on n variables: generators are variable subsets
/// (bitmasks) forming an antichain under inclusion. Empty set of faces is the
/// zero ideal; { emptyset } is the unit ideal.
struct SquarefreeIdeal {
    int n = 0;
    std::set<std::uint32_t> faces;

    static SquarefreeIdeal from_faces(int n, const std::set<std::uint32_t>& raw) {
        SquarefreeIdeal out{n, {}};
        for (auto f : raw) {
            if (f >> n) throw InvalidParameter("SquarefreeIdeal: face outside the variable set");
            bool redundant = false;
            for (auto g : raw)
                if (g != f && (f & g) == g) { redundant = true; break; }
            if (!redundant) out.faces.insert(f);
        }
        return out;
    }

    bool is_zero() const { return faces.empty(); }
    bool is_unit() const { return faces.size() == 1 && *faces.begin() == 0; }
    auto operator<=>(const SquarefreeIdeal&) const = default;
};

inline SquarefreeIdeal sf_sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    if (a.n != b.n) throw DimensionMismatch("sf_sum: different rings");
    std::set<std::uint32_t> f = a.faces;
    f.insert(b.faces.begin(), b.faces.end());
    return SquarefreeIdeal::from_faces(a.n, f);
}

inline SquarefreeIdeal sf_intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    if (a.n != b.n) throw DimensionMismatch("sf_intersect: different rings");
    std::set<std::uint32_t> f;
    for (auto x : a.faces)
        for (auto y : b.faces) f.insert(x | y);
    return SquarefreeIdeal::from_faces(a.n, f);
}

/// I : x^g for a squarefree monomial g, then intersected over the generators
/// of J for the ideal colon.
inline SquarefreeIdeal sf_colon(const SquarefreeIdeal& I, const SquarefreeIdeal& J) {
    if (I.n != J.n) throw DimensionMismatch("sf_colon: different rings");
    if (J.is_zero()) return SquarefreeIdeal::from_faces(I.n, {0});
    SquarefreeIdeal acc;
    bool first = true;
    for (auto g : J.faces) {
        std::set<std::uint32_t> f;
        for (auto x : I.faces) f.insert(x & ~g);
        SquarefreeIdeal piece = SquarefreeIdeal::from_faces(I.n, f);
        acc = first ? piece : sf_intersect(acc, piece);
        first = false;
    }
    return acc;
}

/// All nonzero squarefree monomial ideals on n variables, by enumerating the
/// nonempty antichains in the Boolean lattice. Guarded to small n.
inline std::set<SquarefreeIdeal> all_squarefree_ideals(int n) {
    if (n < 1 || n > 4) throw InvalidParameter("all_squarefree_ideals: need 1 <= n <= 4");
    const int subsets = 1 << n;
    std::set<SquarefreeIdeal> out;
    for (std::uint64_t pick = 1; pick < (1ULL << subsets); ++pick) {
        std::set<std::uint32_t> faces;
        for (int s = 0; s < subsets; ++s)
            if (pick >> s & 1) faces.insert(static_cast<std::uint32_t>(s));
        bool antichain = true;
        for (auto f : faces)
            for (auto g : faces)
                if (f != g && (f & g) == g) antichain = false;
        if (antichain) out.insert(SquarefreeIdeal{n, faces});
    }
    return out;
}

/// Least set containing (x_1...x_n) and closed under pairwise sum, pairwise
/// intersection, and colon by every squarefree monomial ideal.
inline std::set<SquarefreeIdeal> cu_closure(int n) {
    if (n < 1) throw InvalidParameter("cu_closure: n must be >= 1");
    if (n > 4) throw InvalidParameter("cu_closure: n > 4 is not tractable here");
    const auto divisors = all_squarefree_ideals(n);
    std::set<SquarefreeIdeal> reached;
    reached.insert(SquarefreeIdeal::from_faces(n, {static_cast<std::uint32_t>((1 << n) - 1)}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<SquarefreeIdeal> next = reached;
        for (const auto& a : reached) {
            for (const auto& b : reached) {
                next.insert(sf_sum(a, b));
                next.insert(sf_intersect(a, b));
            }
            for (const auto& j : divisors) next.insert(sf_colon(a, j));
        }
        if (next.size() != reached.size()) {
            reached = std::move(next);
            grew = true;
        }
    }
    return reached;
}

}

#endif
