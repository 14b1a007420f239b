#ifndef FTHRESH_FROBENIUS_HPP
#define FTHRESH_FROBENIUS_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "lp.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "staircase.hpp"

namespace fthresh {

/// DP/enumeration cell budget. FTL_COST_CEILING overrides the default.
inline long long cost_ceiling() {
    if (const char* env = std::getenv("FTL_COST_CEILING")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 1LL << 24;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct FrobeniusConfig {
    int p = 2;
    int e_max = 6;
    int stabilization_window = 2;
    long long q_cap = 0;  // 0 = no cap beyond e_max

    void validate() const {
        if (!is_prime(p)) throw InvalidParameter("FrobeniusConfig: p must be prime");
        if (e_max < 1) throw InvalidParameter("FrobeniusConfig: e_max must be >= 1");
        if (stabilization_window < 1)
            throw InvalidParameter("FrobeniusConfig: window must be >= 1");
    }
};

/// nu_e(I) = max { r : I^r not inside m^[q] }, q = p^e. A product of r
/// generators with all exponents <= q-1 witnesses I^r not in m^[q], and such
/// products suffice; the DP tracks, for each exponent profile in [0,q-1]^n,
/// the largest number of generator factors fitting under it.
inline long nu_e(const MonomialIdeal& I, int p, int e) {
    if (!is_prime(p)) throw InvalidParameter("nu_e: p must be prime");
    if (e < 1) throw InvalidParameter("nu_e: e must be >= 1");
    if (I.is_unit()) throw InvalidParameter("nu_e: unit ideal");
    if (I.is_zero()) return 0;
    for (const auto& g : I.gens)
        if (g == IntVec(I.n, 0)) throw InvalidParameter("nu_e: ideal not inside the maximal ideal");

    long long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    long long cells = 1;
    for (int i = 0; i < I.n; ++i) {
        cells *= q;
        if (cells > cost_ceiling())
            throw CostLimit("nu_e: q^n exceeds the DP cell budget");
    }

    const std::vector<IntVec> gens(I.gens.begin(), I.gens.end());
    std::vector<int32_t> dp(static_cast<std::size_t>(cells), 0);
    IntVec v(I.n, 0);
    std::vector<long long> stride(I.n, 1);
    for (int i = I.n - 2; i >= 0; --i) stride[i] = stride[i + 1] * q;
    long long idx = 0;
    long best = 0;
    for (;;) {
        int32_t cur = 0;
        for (const auto& g : gens) {
            bool fits = true;
            long long off = 0;
            for (int i = 0; i < I.n; ++i) {
                if (g[i] > v[i]) { fits = false; break; }
                off += stride[i] * g[i];
            }
            if (fits) cur = std::max(cur, dp[idx - off] + 1);
        }
        dp[idx] = cur;
        if (cur > best) best = cur;
        int i = I.n;
        bool done = false;
        while (i > 0) {
            --i;
            if (v[i] < q - 1) { ++v[i]; idx += stride[i]; break; }
            idx -= stride[i] * v[i];
            v[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return best;
}

namespace detail {

// Decide max { sum c_g : sum c_g * g <= budget, c >= 0 integral } >= target by
// branch and bound on the exact LP relaxation. Feasibility answers are always
// certified by an explicit integer point re-checked with exact arithmetic;
// infeasibility rests on the LP bound.
inline bool fits_in_box_at_least(const std::vector<IntVec>& gens,
                                 const std::vector<long long>& budget, long long target) {
    if (target <= 0) return true;
    const int n = static_cast<int>(budget.size());
    const std::size_t G = gens.size();

    auto verify = [&](const std::vector<Int>& c) {
        Int total = 0;
        for (int i = 0; i < n; ++i) {
            Int load = 0;
            for (std::size_t g = 0; g < G; ++g) load += c[g] * gens[g][i];
            if (load > budget[i]) return false;
        }
        for (const auto& cg : c) total += cg;
        return total >= target;
    };

    struct Node {
        std::vector<Int> lo;
        std::vector<std::optional<Int>> hi;
    };
    std::vector<Node> stack;
    stack.push_back({std::vector<Int>(G, Int(0)), std::vector<std::optional<Int>>(G)});

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        LpProblem lp;
        lp.num_vars = G;
        lp.objective.assign(G, Rational(-1));  // maximize sum c
        for (int i = 0; i < n; ++i) {
            LpRow row;
            row.rel = Rel::LessEq;
            row.rhs = budget[i];
            for (std::size_t g = 0; g < G; ++g) row.coeffs.push_back(gens[g][i]);
            lp.rows.push_back(std::move(row));
        }
        for (std::size_t g = 0; g < G; ++g) {
            if (node.lo[g] > 0) {
                RationalVector c(G, Rational(0));
                c[g] = 1;
                lp.rows.push_back({std::move(c), Rel::GreaterEq, Rational(node.lo[g])});
            }
            if (node.hi[g]) {
                RationalVector c(G, Rational(0));
                c[g] = 1;
                lp.rows.push_back({std::move(c), Rel::LessEq, Rational(*node.hi[g])});
            }
        }
        auto sol = solve_lp(lp);
        if (sol.status == LpStatus::Infeasible) continue;
        if (sol.status == LpStatus::Unbounded) return true;  // a zero generator
        const Rational value = -sol.value;
        if (value < target) continue;

        std::vector<Int> floored(G);
        std::size_t frac = G;
        for (std::size_t g = 0; g < G; ++g) {
            floored[g] = rat_floor(sol.x[g]);
            if (Rational(floored[g]) != sol.x[g]) frac = g;
        }
        if (verify(floored)) return true;
        if (frac == G) continue;  // integral LP optimum below target

        Node down = node, up = node;
        Int f = rat_floor(sol.x[frac]);
        down.hi[frac] = f;
        up.lo[frac] = f + 1;
        stack.push_back(std::move(down));
        stack.push_back(std::move(up));
    }
    return false;
}

}  // namespace detail

/// Is the monomial x^b in I^r? Equivalent to fitting r generator factors
/// under the exponent box b.
inline bool monomial_in_power(const MonomialIdeal& I, const std::vector<long long>& b, long long r) {
    if (static_cast<int>(b.size()) != I.n) throw DimensionMismatch("monomial_in_power: length");
    if (r <= 0) return true;
    if (I.is_zero()) return false;
    std::vector<IntVec> gens(I.gens.begin(), I.gens.end());
    return detail::fits_in_box_at_least(gens, b, r);
}

struct TauDefinitionResult {
    MonomialIdeal ideal;
    bool stabilized = false;
    int e_used = 0;
};

/// tau(lambda * I) by definition: the e-th approximation is the p^e-th root of
/// I^ceil(lambda p^e); the chain ascends and is expected to stabilize. The
/// root is extracted without expanding I^r: u lies in it iff I^r has a
/// generator under q*u + (q-1), decided by the integer fitting test above.
inline TauDefinitionResult tau_definition(const MonomialIdeal& I, const Rational& lambda,
                                          const FrobeniusConfig& cfg) {
    cfg.validate();
    if (lambda < 0) throw InvalidParameter("tau_definition: negative lambda");
    if (lambda == 0) return {MonomialIdeal::unit(I.n), true, 0};
    if (I.is_zero()) return {MonomialIdeal::zero(I.n), true, 0};
    if (I.is_unit()) return {MonomialIdeal::unit(I.n), true, 0};

    IntVec maxexp(I.n, 0);
    for (const auto& g : I.gens)
        for (int i = 0; i < I.n; ++i) maxexp[i] = std::max(maxexp[i], g[i]);

    std::vector<MonomialIdeal> chain;
    long long q = 1;
    for (int e = 1; e <= cfg.e_max; ++e) {
        q *= cfg.p;
        if (cfg.q_cap > 0 && q > cfg.q_cap) break;
        const long long r = to_long(rat_ceil(lambda * q));
        IntVec corner(I.n, 0);
        for (int i = 0; i < I.n; ++i)
            corner[i] = static_cast<int>(to_long(rat_ceil(Rational(r * maxexp[i], q))));
        auto member = [&](const IntVec& u) {
            // u is in the root iff some generator a of I^r has floor(a/q) <= u,
            // i.e. a <= q*u + (q-1) componentwise
            std::vector<long long> budget(I.n);
            for (int i = 0; i < I.n; ++i) budget[i] = q * u[i] + (q - 1);
            return monomial_in_power(I, budget, r);
        };
        auto gens = detail::minimal_points_in_box(corner, member);
        MonomialIdeal J{I.n, std::move(gens)};
        if (!chain.empty() && !J.contains(chain.back()))
            throw InternalError("tau_definition: root chain failed to ascend");
        chain.push_back(std::move(J));
    }
    if (chain.empty()) throw CostLimit("tau_definition: q cap excludes every e");

    bool stabilized = static_cast<int>(chain.size()) >= cfg.stabilization_window;
    for (int i = 1; i < cfg.stabilization_window && stabilized; ++i)
        stabilized = chain[chain.size() - 1 - i] == chain.back();
    return {chain.back(), stabilized, static_cast<int>(chain.size())};
}

}

#endif
