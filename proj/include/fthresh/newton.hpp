#ifndef FTHRESH_NEWTON_HPP
#define FTHRESH_NEWTON_HPP

#include <set>
#include <vector>

#include "errors.hpp"
#include "family.hpp"
#include "monomial.hpp"
#include "polytope.hpp"
#include "rational.hpp"
#include "staircase.hpp"
#include "test_ideal.hpp"

namespace fthresh {

/// The coordinate-hyperplane family p_k = (x_k): heights 1, e-matrix the
/// identity. Conditions hold by the Newton-polyhedron description of integral
/// closures; check_a_plus re-verifies A+ computationally.
inline PrimeFamily monomial_family(int n) {
    if (n < 1) throw InvalidParameter("monomial_family: n must be >= 1");
    PrimeFamily fam;
    fam.name = "monomial:" + std::to_string(n);
    fam.m = n;
    fam.heights.assign(n, 1);
    fam.e_matrix.assign(n, std::vector<int>(n, 0));
    for (int k = 0; k < n; ++k) fam.e_matrix[k][k] = 1;
    fam.cond_a = ConditionFlag::verified();
    fam.cond_a_plus = ConditionFlag::verified();
    fam.cond_b = ConditionFlag::verified();  // witness: the product of all variables
    fam.containment_oracle = "monomial";
    fam.validate();
    return fam;
}

/// For coordinate primes, distinct intersection vectors are distinct principal
/// monomials; only divisibility prunes.
inline ContainmentOracle monomial_oracle() {
    return [](const IntVec& w, const IntVec& w2) { return dominates(w, w2); };
}

/// Lattice points of the Newton polyhedron conv(gens) + R_{>=0}^n, as a
/// monomial ideal. Integer points of the polyhedron with a coordinate above
/// the generator maximum are never minimal, so the generator box suffices.
inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
    if (I.is_zero()) return MonomialIdeal::zero(I.n);
    std::vector<RationalVector> pts;
    for (const auto& g : I.gens) pts.emplace_back(g.begin(), g.end());
    const Polytope P = hull_normalize(pts);
    IntVec corner(I.n, 0);
    for (const auto& g : I.gens)
        for (int i = 0; i < I.n; ++i) corner[i] = std::max(corner[i], g[i]);
    auto member = [&](const IntVec& w) {
        RationalVector bound(w.begin(), w.end());
        return feasible_box(P, bound, BoxMode::Weak);
    };
    auto gens = detail::minimal_points_in_box(corner, member);
    return MonomialIdeal{I.n, std::move(gens)};
}

inline MonomialIdeal ideal_of_sigma(int n, const SigmaSet& Sigma) {
    return MonomialIdeal::from_gens(n, Sigma);
}

/// Monomial ideal spanned by the ceil staircase of s * P_Sigma.
inline MonomialIdeal ceil_staircase_ideal(int n, const SigmaSet& Sigma, int s) {
    std::vector<RationalVector> pts;
    for (const auto& sigma : Sigma) pts.emplace_back(sigma.begin(), sigma.end());
    const Polytope P = hull_normalize(pts);
    auto gens = staircase_antichain(P, Rational(s), IntVec(n, 0), RoundingMode::Ceil);
    return MonomialIdeal{n, std::move(gens)};
}

/// Verifies the convexity condition on the coordinate family for this Sigma:
/// the closure of I(Sigma)^s must equal the ceil staircase of s * P_Sigma for
/// s = 1..s_max.
inline bool check_a_plus(const SigmaSet& Sigma, int n, int s_max = 3) {
    if (Sigma.empty()) throw EmptyPointSet("check_a_plus: empty sigma set");
    const MonomialIdeal I = ideal_of_sigma(n, Sigma);
    for (int s = 1; s <= s_max; ++s) {
        if (integral_closure(power(I, s)) != ceil_staircase_ideal(n, Sigma, s)) return false;
    }
    return true;
}

/// Monomial ideal named by a test-ideal description over the coordinate
/// family: each intersection vector is the principal monomial x^w.
inline MonomialIdeal description_to_monomial_ideal(const TestIdealDescription& d, int n) {
    std::set<IntVec> gens;
    for (const auto& w : d.antichain) {
        if (static_cast<int>(w.size()) != n)
            throw DimensionMismatch("description_to_monomial_ideal: length");
        gens.insert(w);
    }
    return MonomialIdeal::from_gens(n, gens);
}

}

#endif
