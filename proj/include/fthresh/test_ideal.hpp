#ifndef FTHRESH_TEST_IDEAL_HPP
#define FTHRESH_TEST_IDEAL_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "family.hpp"
#include "polytope.hpp"
#include "rational.hpp"
#include "staircase.hpp"

namespace fthresh {

using SigmaSet = std::set<IntVec>;

enum class DescriptionLevel { Representation, OraclePruned };

/// Certifies term containments: oracle(w, w2) == true means the intersection
/// ideal described by w is contained in the one described by w2. False means
/// "not certified", never "certified distinct".
using ContainmentOracle = std::function<bool(const IntVec&, const IntVec&)>;

/// A sum of symbolic-power intersections, presented as the antichain of their
/// exponent vectors. {0-vector} is the unit ideal.
struct TestIdealDescription {
    std::set<IntVec> antichain;
    std::string family_ref;
    DescriptionLevel level = DescriptionLevel::Representation;

    bool is_unit() const {
        return antichain.size() == 1 && *antichain.begin() == IntVec(antichain.begin()->size(), 0);
    }
    bool operator==(const TestIdealDescription&) const = default;
};

inline TestIdealDescription normalize_description(const std::set<IntVec>& raw,
                                                  const PrimeFamily& family,
                                                  const ContainmentOracle& oracle = nullptr) {
    for (const auto& w : raw)
        if (static_cast<int>(w.size()) != family.m)
            throw DimensionMismatch("normalize_description: vector length");
    TestIdealDescription d;
    d.family_ref = family.name;
    d.antichain = minimal_antichain(raw);
    if (oracle) {
        d.level = DescriptionLevel::OraclePruned;
        bool removed = true;
        while (removed) {
            removed = false;
            for (const auto& w : d.antichain) {
                for (const auto& w2 : d.antichain) {
                    if (w == w2) continue;
                    if (oracle(w, w2)) {
                        d.antichain.erase(w);
                        removed = true;
                        break;
                    }
                }
                if (removed) break;
            }
        }
    }
    return d;
}

/// tau(lambda * p_1^s1...p_m^sm) as a single intersection exponent vector:
/// w_k = max(0, floor(lambda*e_k) + 1 - h_k).
inline IntVec tau_power(const PrimeFamily& family, const IntVec& sigma, const Rational& lambda) {
    if (lambda < 0) throw InvalidParameter("tau_power: negative lambda");
    const IntVec e = e_map(family, sigma);
    IntVec w(family.m, 0);
    for (int k = 0; k < family.m; ++k) {
        Int wk = rat_floor(lambda * e[k]) + 1 - family.heights[k];
        if (wk > 0) w[k] = static_cast<int>(to_long(wk));
    }
    return w;
}

/// Smallest lambda at which tau(lambda * I^sigma) is proper:
/// min over { k : e_k > 0 } of h_k / e_k. nullopt encodes +infinity.
inline std::optional<Rational> fpt_power(const PrimeFamily& family, const IntVec& sigma) {
    if (sigma == IntVec(sigma.size(), 0)) throw InvalidParameter("fpt_power: sigma = 0");
    const IntVec e = e_map(family, sigma);
    std::optional<Rational> best;
    for (int k = 0; k < family.m; ++k) {
        if (e[k] == 0) continue;
        Rational cand(family.heights[k], e[k]);
        if (!best || cand < *best) best = cand;
    }
    return best;
}

inline std::vector<std::pair<Rational, IntVec>> jumping_numbers_power(
    const PrimeFamily& family, const IntVec& sigma, const Rational& limit) {
    if (limit <= 0) throw InvalidParameter("jumping_numbers_power: limit must be positive");
    if (sigma == IntVec(sigma.size(), 0)) throw InvalidParameter("jumping_numbers_power: sigma = 0");
    const IntVec e = e_map(family, sigma);
    std::set<Rational> candidates;
    for (int k = 0; k < family.m; ++k) {
        if (e[k] == 0) continue;
        for (Int n = family.heights[k]; Rational(n, e[k]) <= limit; ++n)
            candidates.insert(Rational(n, e[k]));
    }
    std::vector<std::pair<Rational, IntVec>> jumps;
    Rational prev = 0;
    IntVec prev_w(family.m, 0);
    for (const auto& lam : candidates) {
        // the value just left of lam equals the value at any interior point
        IntVec before = tau_power(family, sigma, (prev + lam) / 2);
        IntVec at = tau_power(family, sigma, lam);
        if (before != prev_w)
            throw InternalError("jumping_numbers_power: change off the candidate grid");
        if (at != prev_w) jumps.emplace_back(lam, at);
        prev = lam;
        prev_w = at;
    }
    return jumps;
}

namespace detail {

inline Polytope sigma_polytope(const PrimeFamily& family, const SigmaSet& Sigma) {
    if (Sigma.empty()) throw EmptyPointSet("sigma set is empty");
    std::vector<RationalVector> pts;
    for (const auto& sigma : Sigma) {
        const IntVec e = e_map(family, sigma);
        RationalVector v(e.begin(), e.end());
        pts.push_back(std::move(v));
    }
    return hull_normalize(pts);
}

}  // namespace detail

/// tau(lambda * I(Sigma)) via the floor staircase of the e-image polytope.
inline TestIdealDescription tau_sum(const PrimeFamily& family, const SigmaSet& Sigma,
                                    const Rational& lambda,
                                    const ContainmentOracle& oracle = nullptr) {
    if (lambda < 0) throw InvalidParameter("tau_sum: negative lambda");
    const Polytope P = detail::sigma_polytope(family, Sigma);
    auto antichain = staircase_antichain(P, lambda, family.heights, RoundingMode::Floor);
    return normalize_description(antichain, family, oracle);
}

inline std::optional<Rational> fpt_sum(const PrimeFamily& family, const SigmaSet& Sigma) {
    const Polytope P = detail::sigma_polytope(family, Sigma);
    RationalVector d(family.heights.begin(), family.heights.end());
    auto ratio = min_max_ratio(P, d);
    if (!ratio || *ratio <= 0) return std::nullopt;
    return 1 / *ratio;
}

inline std::vector<std::pair<Rational, TestIdealDescription>> jumping_numbers_sum(
    const PrimeFamily& family, const SigmaSet& Sigma, const Rational& limit,
    const ContainmentOracle& oracle = nullptr) {
    if (limit <= 0) throw InvalidParameter("jumping_numbers_sum: limit must be positive");
    const Polytope P = detail::sigma_polytope(family, Sigma);

    IntVec corner(family.m, 0);
    for (int k = 0; k < family.m; ++k) {
        Rational mk = 0;
        for (const auto& g : P.generators) mk = std::max(mk, g[k]);
        Int top = rat_floor(limit * mk) + 1 - family.heights[k];
        corner[k] = top < 0 ? 0 : static_cast<int>(to_long(top));
    }

    // Every change of the staircase on (0, limit] happens at the disappearance
    // threshold of some boxed w.
    std::set<Rational> candidates;
    IntVec w(family.m, 0);
    for (;;) {
        RationalVector d(family.m);
        for (int k = 0; k < family.m; ++k) d[k] = w[k] + family.heights[k];
        auto ratio = min_max_ratio(P, d);
        if (ratio && *ratio > 0) {
            Rational lam = 1 / *ratio;
            if (lam <= limit) candidates.insert(lam);
        }
        int i = family.m;
        bool done = false;
        while (i > 0) {
            --i;
            if (w[i] < corner[i]) { ++w[i]; break; }
            w[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }

    std::vector<std::pair<Rational, TestIdealDescription>> jumps;
    Rational prev = 0;
    std::optional<TestIdealDescription> prev_tau;
    for (const auto& lam : candidates) {
        TestIdealDescription before = tau_sum(family, Sigma, (prev + lam) / 2, oracle);
        TestIdealDescription at = tau_sum(family, Sigma, lam, oracle);
        if (prev_tau && before != *prev_tau)
            throw InternalError("jumping_numbers_sum: change off the candidate grid");
        if (at != before) jumps.emplace_back(lam, at);
        prev = lam;
        prev_tau = at;
    }
    return jumps;
}

}

#endif
