#ifndef FTHRESH_POLY_HPP
#define FTHRESH_POLY_HPP

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace fthresh {

/// Exact-integer-coefficient multivariate polynomial. Terms map exponent
/// vectors to nonzero coefficients; the variable at index 0 is the largest in
/// the lex order, so the lex-leading term is the map's last key.
struct SparsePolynomial {
    int nvars = 0;
    std::map<IntVec, Int> terms;

    static constexpr std::size_t term_cap = 1'000'000;

    bool is_zero() const { return terms.empty(); }

    void add_term(const IntVec& exp, const Int& coeff) {
        if (static_cast<int>(exp.size()) != nvars)
            throw DimensionMismatch("SparsePolynomial: exponent length");
        auto it = terms.find(exp);
        if (it == terms.end()) {
            if (coeff != 0) terms.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }
};

inline SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("poly_add: variable counts differ");
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
}

inline SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("poly_mul: variable counts differ");
    if (a.terms.size() * b.terms.size() > SparsePolynomial::term_cap)
        throw CostLimit("poly_mul: term budget exceeded");
    SparsePolynomial out{a.nvars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            IntVec e(a.nvars);
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
            if (out.terms.size() > SparsePolynomial::term_cap)
                throw CostLimit("poly_mul: term budget exceeded");
        }
    return out;
}

/// Exponent vector of the lex-largest monomial under x_0 > x_1 > ... .
inline IntVec lex_leading(const SparsePolynomial& p) {
    if (p.is_zero()) throw InvalidParameter("lex_leading: zero polynomial");
    return p.terms.rbegin()->first;
}

inline bool is_squarefree_exponent(const IntVec& e) {
    for (int v : e)
        if (v > 1) return false;
    return true;
}

/// Order of membership in the prime generated by the listed variables:
/// min over terms of the total degree in those variables.
inline long ord_coordinate_prime(const SparsePolynomial& p, const std::set<int>& vars) {
    if (p.is_zero()) throw InvalidParameter("ord_coordinate_prime: zero polynomial");
    for (int v : vars)
        if (v < 0 || v >= p.nvars) throw InvalidParameter("ord_coordinate_prime: bad variable");
    long best = -1;
    for (const auto& [e, c] : p.terms) {
        long deg = 0;
        for (int v : vars) deg += e[v];
        if (best < 0 || deg < best) best = deg;
    }
    return best;
}

}

#endif
