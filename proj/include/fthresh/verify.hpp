#ifndef FTHRESH_VERIFY_HPP
#define FTHRESH_VERIFY_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "determinantal.hpp"
#include "frobenius.hpp"
#include "minors.hpp"
#include "monomial.hpp"
#include "newton.hpp"
#include "poly.hpp"
#include "squarefree.hpp"
#include "test_ideal.hpp"

namespace fthresh {

struct SuiteResult {
    std::string suite;
    bool pass = true;
    long cases = 0;
    long skipped = 0;
    std::vector<std::string> failures;
    nlohmann::json details = nlohmann::json::object();

    void fail(const std::string& msg) {
        pass = false;
        failures.push_back(msg);
    }
};

namespace detail {

inline MonomialIdeal random_monomial_ideal(std::mt19937& rng, int max_n = 3, int max_exp = 4,
                                           int max_gens = 4) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> g_dist(1, max_gens);
    std::uniform_int_distribution<int> e_dist(0, max_exp);
    for (;;) {
        std::set<IntVec> gens;
        const int count = g_dist(rng);
        for (int i = 0; i < count; ++i) {
            IntVec g(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                g[j] = e_dist(rng);
                nonzero = nonzero || g[j] > 0;
            }
            if (nonzero) gens.insert(g);
        }
        if (gens.empty()) continue;
        return MonomialIdeal::from_gens(n, gens);
    }
}

inline long long q_cap_for(int p) {
    // Desk-scale caps on q = p^e for the definition-side oracle.
    switch (p) {
        case 2: return 512;
        case 3: return 729;
        case 5: return 625;
        default: return 1024;
    }
}

}  // namespace detail

/// Equality of the staircase closed form against the Frobenius definition on
/// random monomial ideals, with the nu-monotonicity and fpt-bracketing checks
/// riding along on the same instances.
inline SuiteResult monomial_oracle_suite(unsigned seed, int count, const std::vector<int>& p_list,
                                         int e_max) {
    SuiteResult res;
    res.suite = "monomial-oracle";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> t_dist(1, 36);
    std::uniform_int_distribution<std::size_t> p_dist(0, p_list.empty() ? 0 : p_list.size() - 1);
    if (p_list.empty()) {
        res.fail("empty p list");
        return res;
    }
    long oracle_checked = 0, nu_checked = 0;
    for (int i = 0; i < count; ++i) {
        const MonomialIdeal I = detail::random_monomial_ideal(rng);
        const Rational lambda(t_dist(rng), 12);
        const int p = p_list[p_dist(rng)];
        std::ostringstream tag;
        tag << "case " << i << " seed " << seed << " I=" << to_json(I).dump()
            << " lambda=" << format_rational(lambda) << " p=" << p;

        const PrimeFamily fam = monomial_family(I.n);
        const SigmaSet Sigma(I.gens.begin(), I.gens.end());

        FrobeniusConfig cfg{p, e_max, 2, detail::q_cap_for(p)};
        try {
            auto def = tau_definition(I, lambda, cfg);
            if (!def.stabilized) {
                ++res.skipped;
            } else {
                auto formula = description_to_monomial_ideal(tau_sum(fam, Sigma, lambda), I.n);
                ++oracle_checked;
                if (formula != def.ideal)
                    res.fail(tag.str() + ": formula " + to_json(formula).dump() +
                             " != definition " + to_json(def.ideal).dump());
            }
        } catch (const CostLimit&) {
            ++res.skipped;
        }

        // nu monotonicity and fpt bracketing on the same instance
        auto fpt = fpt_sum(fam, Sigma);
        long prev_nu = -1;
        long long q = 1;
        for (int e = 1; e <= e_max; ++e) {
            q *= p;
            long long cells = 1;
            bool ok = true;
            for (int d = 0; d < I.n; ++d) {
                cells *= q;
                if (cells > cost_ceiling()) { ok = false; break; }
            }
            if (!ok || (cfg.q_cap > 0 && q > cfg.q_cap)) break;
            const long nu = nu_e(I, p, e);
            ++nu_checked;
            if (prev_nu >= 0 && nu < p * prev_nu)
                res.fail(tag.str() + ": nu_" + std::to_string(e) + " < p*nu_" +
                         std::to_string(e - 1));
            if (fpt && Rational(nu, q) > *fpt)
                res.fail(tag.str() + ": nu_e/q exceeds the fpt closed form at e=" +
                         std::to_string(e));
            prev_nu = nu;
        }
        ++res.cases;
    }
    res.details["oracle_equalities_checked"] = oracle_checked;
    res.details["nu_values_checked"] = nu_checked;
    res.details["skipped_unstabilized_or_capped"] = res.skipped;
    return res;
}

/// Convexity condition on the coordinate family: closure of I(Sigma)^s equals
/// the ceil staircase of s*P_Sigma, plus the sumset scaling identity.
inline SuiteResult aplus_suite(unsigned seed, int count, int max_n = 3, int max_coord = 5) {
    SuiteResult res;
    res.suite = "aplus";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> n_dist(1, max_n);
    std::uniform_int_distribution<int> size_dist(1, 4);
    std::uniform_int_distribution<int> c_dist(0, max_coord);
    for (int i = 0; i < count; ++i) {
        const int n = n_dist(rng);
        SigmaSet Sigma;
        const int want = size_dist(rng);
        while (static_cast<int>(Sigma.size()) < want) {
            IntVec s(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                s[j] = c_dist(rng);
                nonzero = nonzero || s[j] > 0;
            }
            if (nonzero) Sigma.insert(s);
        }
        std::ostringstream tag;
        tag << "case " << i << " n=" << n;
        if (!check_a_plus(Sigma, n)) res.fail(tag.str() + ": closure != ceil staircase");
        // sumset scaling: the staircase of s*P_Sigma is the staircase of P at Sigma^s
        for (int s = 1; s <= 3; ++s) {
            SigmaSet sumset;
            std::vector<IntVec> base(Sigma.begin(), Sigma.end());
            std::vector<int> idx(s, 0);
            for (;;) {
                IntVec total(n, 0);
                for (int t = 0; t < s; ++t)
                    for (int j = 0; j < n; ++j) total[j] += base[idx[t]][j];
                sumset.insert(total);
                int t = s;
                bool done = false;
                while (t > 0) {
                    --t;
                    if (idx[t] + 1 < static_cast<int>(base.size())) { ++idx[t]; break; }
                    idx[t] = 0;
                    if (t == 0) done = true;
                }
                if (done) break;
            }
            if (ceil_staircase_ideal(n, Sigma, s) != ceil_staircase_ideal(n, sumset, 1))
                res.fail(tag.str() + ": sumset scaling fails at s=" + std::to_string(s));
        }
        ++res.cases;
    }
    return res;
}

/// Diagonal cover of the grid for all small (m,n); full expansion of the
/// minor product where feasible, including the coordinate-prime order check
/// on the 2x2 instance.
inline SuiteResult delta_suite(int max_mn = 6) {
    SuiteResult res;
    res.suite = "delta";
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 1; m <= max_mn; ++m) {
        for (int n = m; n <= max_mn; ++n) {
            const auto dm = delta_minors(m, n);
            nlohmann::json row;
            row["m"] = m;
            row["n"] = n;
            const bool cover = diagonal_cover_check(dm.all(), m, n);
            row["cover_ok"] = cover;
            if (!cover)
                res.fail("diagonal cover fails at (" + std::to_string(m) + "," +
                         std::to_string(n) + ")");
            if (n <= 3) {
                const SparsePolynomial delta = expand_product(dm.all(), m, n);
                const IntVec lead = lex_leading(delta);
                const bool sqfree = lead == IntVec(m * n, 1);
                row["leading_squarefree"] = sqfree;
                if (!sqfree)
                    res.fail("leading term not the squarefree grid product at (" +
                             std::to_string(m) + "," + std::to_string(n) + ")");
            }
            if (m == 2 && n == 2) {
                const SparsePolynomial delta = expand_product(dm.all(), m, n);
                // the prime (x11, x21, x22) from the counterexample
                const long ord = ord_coordinate_prime(delta, {0, 2, 3});
                row["ord_counterexample"] = ord;
                if (ord != 2) res.fail("2x2 coordinate-prime order is not 2");
            }
            rows.push_back(row);
            ++res.cases;
        }
    }
    res.details["pairs"] = rows;
    return res;
}

/// The closure explorer reaches exactly the nonzero squarefree ideals.
inline SuiteResult cf_closure_suite(int n) {
    SuiteResult res;
    res.suite = "cf-closure";
    const auto reached = cu_closure(n);
    const auto expected = all_squarefree_ideals(n);
    res.cases = static_cast<long>(reached.size());
    res.details["reached"] = reached.size();
    res.details["expected"] = expected.size();
    if (reached != expected)
        res.fail("closure reached " + std::to_string(reached.size()) + " of " +
                 std::to_string(expected.size()) + " squarefree ideals");
    return res;
}

/// e-map linearity against the shape combinatorics of the generic preset,
/// gamma additivity, and the pruning containment example.
inline SuiteResult gamma_linearity_suite(unsigned seed, int count) {
    SuiteResult res;
    res.suite = "gamma-linearity";
    std::mt19937 rng(seed);
    const std::vector<std::pair<int, int>> grids = {{2, 3}, {2, 4}, {3, 3}, {3, 5}};
    std::uniform_int_distribution<std::size_t> grid_dist(0, grids.size() - 1);
    for (int i = 0; i < count; ++i) {
        auto [m, n] = grids[grid_dist(rng)];
        const PrimeFamily fam = preset_generic(m, n);
        IntVec sigma(m, 0);
        std::uniform_int_distribution<int> part_dist(0, m - 1);
        std::uniform_int_distribution<int> total_dist(1, 6);
        const int total = total_dist(rng);
        for (int t = 0; t < total; ++t) ++sigma[part_dist(rng)];
        MinorShape shape;
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < sigma[j]; ++c) shape.push_back(j + 1);
        const IntVec e = e_map(fam, sigma);
        for (int k = 1; k <= m; ++k)
            if (e[k - 1] != gamma(shape, k))
                res.fail("e_map disagrees with gamma at case " + std::to_string(i));
        // additivity of gamma over disjoint union
        MinorShape doubled = shape;
        doubled.insert(doubled.end(), shape.begin(), shape.end());
        for (int k = 1; k <= m; ++k)
            if (gamma(doubled, k) != 2 * gamma(shape, k))
                res.fail("gamma additivity fails at case " + std::to_string(i));
        ++res.cases;
    }
    auto pruning = gamma_containment({1, 2}, {0, 2}, 2);
    if (pruning.status != ContainmentStatus::Contained)
        res.fail("expected I1^(1) ∩ I2^(2) inside I2^(2)");
    auto example = gamma_containment({0, 2}, {1, 0}, 2);
    if (example.status != ContainmentStatus::Contained)
        res.fail("expected I2^(2) inside I1 for the 2-row generic family");
    auto witness = gamma_containment({1, 0}, {0, 1}, 2);
    if (witness.status != ContainmentStatus::NotContained)
        res.fail("expected a witness against I1 inside I2");
    return res;
}

}

#endif
