#ifndef FTHRESH_MINORS_HPP
#define FTHRESH_MINORS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace fthresh {

/// A k-minor [a_1..a_k | b_1..b_k] of the ambient matrix of variables.
struct Minor {
    std::vector<int> rows;  // strictly increasing, 1-based
    std::vector<int> cols;

    int size() const { return static_cast<int>(rows.size()); }

    void validate(int m, int n) const {
        if (rows.empty() || rows.size() != cols.size())
            throw InvalidParameter("Minor: row/column lists must be nonempty and equal length");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 1 || rows[i] > m || cols[i] < 1 || cols[i] > n)
                throw InvalidParameter("Minor: index outside the ambient matrix");
            if (i > 0 && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))
                throw InvalidParameter("Minor: indices must be strictly increasing");
        }
    }

    bool operator==(const Minor&) const = default;
};

struct DeltaMinors {
    std::vector<Minor> deltas;  // delta_0 .. delta_{n-m}
    std::vector<Minor> gs;      // g_1 .. g_{m-1}
    std::vector<Minor> hs;      // h_1 .. h_{m-1}

    std::vector<Minor> all() const {
        std::vector<Minor> out = deltas;
        out.insert(out.end(), gs.begin(), gs.end());
        out.insert(out.end(), hs.begin(), hs.end());
        return out;
    }
};

/// The minors whose product has squarefree lex-leading term covering the
/// whole m x n grid: delta_i = [1..m | i+1..m+i], g_j = [j+1..m | 1..m-j],
/// h_j = [1..m-j | n-m+j+1..n].
inline DeltaMinors delta_minors(int m, int n) {
    if (m < 1 || m > n) throw InvalidParameter("delta_minors: need 1 <= m <= n");
    DeltaMinors out;
    auto range = [](int from, int to) {
        std::vector<int> v(to - from + 1);
        std::iota(v.begin(), v.end(), from);
        return v;
    };
    for (int i = 0; i <= n - m; ++i)
        out.deltas.push_back({range(1, m), range(i + 1, m + i)});
    for (int j = 1; j <= m - 1; ++j) {
        out.gs.push_back({range(j + 1, m), range(1, m - j)});
        out.hs.push_back({range(1, m - j), range(n - m + j + 1, n)});
    }
    for (const auto& mn : out.all()) mn.validate(m, n);
    return out;
}

/// Under the row-major lex order the initial term of a minor is its main
/// diagonal; the product of the given minors has squarefree initial term
/// equal to the full grid product iff the diagonals cover each cell once.
inline bool diagonal_cover_check(const std::vector<Minor>& minors, int m, int n) {
    std::vector<int> cover(static_cast<std::size_t>(m) * n, 0);
    for (const auto& mn : minors) {
        mn.validate(m, n);
        for (int t = 0; t < mn.size(); ++t)
            ++cover[static_cast<std::size_t>(mn.rows[t] - 1) * n + (mn.cols[t] - 1)];
    }
    for (int c : cover)
        if (c != 1) return false;
    return true;
}

/// Leibniz expansion of a minor over the flattened x_{ij} grid (row-major).
inline SparsePolynomial expand_minor(const Minor& minor, int m, int n) {
    minor.validate(m, n);
    const int k = minor.size();
    if (k > 5) throw CostLimit("expand_minor: minors above size 5 are not expanded");
    SparsePolynomial out{m * n, {}};
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        IntVec e(m * n, 0);
        for (int i = 0; i < k; ++i)
            ++e[(minor.rows[i] - 1) * n + (minor.cols[perm[i]] - 1)];
        out.add_term(e, (inversions % 2 == 0) ? Int(1) : Int(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline SparsePolynomial expand_product(const std::vector<Minor>& minors, int m, int n) {
    SparsePolynomial acc{m * n, {}};
    acc.add_term(IntVec(m * n, 0), 1);
    for (const auto& mn : minors) acc = poly_mul(acc, expand_minor(mn, m, n));
    return acc;
}

}

#endif
