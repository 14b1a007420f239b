#ifndef FTHRESH_MONOMIAL_HPP
#define FTHRESH_MONOMIAL_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace fthresh {

/// Monomial ideal in n variables, kept as its minimal generating exponent set
/// (an antichain under componentwise divisibility). Empty gens is the zero
/// ideal; {0-vector} is the unit ideal.
struct MonomialIdeal {
    int n = 0;
    std::set<IntVec> gens;

    static MonomialIdeal from_gens(int n, const std::set<IntVec>& raw) {
        for (const auto& g : raw) {
            if (static_cast<int>(g.size()) != n)
                throw DimensionMismatch("MonomialIdeal: generator length");
            for (int e : g)
                if (e < 0) throw InvalidParameter("MonomialIdeal: negative exponent");
        }
        return MonomialIdeal{n, minimal_antichain(raw)};
    }

    static MonomialIdeal zero(int n) { return MonomialIdeal{n, {}}; }
    static MonomialIdeal unit(int n) { return MonomialIdeal{n, {IntVec(n, 0)}}; }

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && *gens.begin() == IntVec(n, 0); }

    bool contains_monomial(const IntVec& mono) const {
        if (static_cast<int>(mono.size()) != n)
            throw DimensionMismatch("contains_monomial: length");
        for (const auto& g : gens)
            if (dominates(mono, g)) return true;
        return false;
    }

    /// Ideal containment: every generator of `other` lies in *this.
    bool contains(const MonomialIdeal& other) const {
        for (const auto& g : other.gens)
            if (!contains_monomial(g)) return false;
        return true;
    }

    bool operator==(const MonomialIdeal&) const = default;
};

namespace detail {
inline void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n != b.n) throw DimensionMismatch("monomial ideals live in different rings");
}
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::check_same_ring(a, b);
    std::set<IntVec> g = a.gens;
    g.insert(b.gens.begin(), b.gens.end());
    return MonomialIdeal::from_gens(a.n, g);
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::check_same_ring(a, b);
    std::set<IntVec> g;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) {
            IntVec z(a.n);
            for (int i = 0; i < a.n; ++i) z[i] = x[i] + y[i];
            g.insert(std::move(z));
        }
    return MonomialIdeal::from_gens(a.n, g);
}

inline MonomialIdeal power(const MonomialIdeal& I, int r) {
    if (r < 0) throw InvalidParameter("power: negative exponent");
    MonomialIdeal acc = MonomialIdeal::unit(I.n);
    for (int i = 0; i < r; ++i) acc = product(acc, I);
    return acc;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::check_same_ring(a, b);
    std::set<IntVec> g;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) {
            IntVec z(a.n);
            for (int i = 0; i < a.n; ++i) z[i] = std::max(x[i], y[i]);
            g.insert(std::move(z));
        }
    return MonomialIdeal::from_gens(a.n, g);
}

inline MonomialIdeal colon_monomial(const MonomialIdeal& I, const IntVec& mono) {
    std::set<IntVec> g;
    for (const auto& x : I.gens) {
        IntVec z(I.n);
        for (int i = 0; i < I.n; ++i) z[i] = std::max(x[i] - mono[i], 0);
        g.insert(std::move(z));
    }
    return MonomialIdeal::from_gens(I.n, g);
}

inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::check_same_ring(I, J);
    if (J.is_zero()) return MonomialIdeal::unit(I.n);  // I : (0) = S
    MonomialIdeal acc = MonomialIdeal::unit(I.n);
    bool first = true;
    for (const auto& g : J.gens) {
        MonomialIdeal piece = colon_monomial(I, g);
        acc = first ? piece : intersect(acc, piece);
        first = false;
    }
    return acc;
}

/// I^[q]: generators raised to the q-th power componentwise.
inline MonomialIdeal bracket_power(const MonomialIdeal& I, int q) {
    if (q < 1) throw InvalidParameter("bracket_power: q must be >= 1");
    std::set<IntVec> g;
    for (const auto& x : I.gens) {
        IntVec z(I.n);
        for (int i = 0; i < I.n; ++i) z[i] = x[i] * q;
        g.insert(std::move(z));
    }
    return MonomialIdeal{I.n, std::move(g)};  // antichain is preserved by scaling
}

/// Smallest J with I <= J^[q]: generated by the componentwise floors a/q,
/// since q*floor(a/q) <= a while q*ceil(a/q) can overshoot.
inline MonomialIdeal qth_root(const MonomialIdeal& I, int q) {
    if (q < 1) throw InvalidParameter("qth_root: q must be >= 1");
    std::set<IntVec> g;
    for (const auto& x : I.gens) {
        IntVec z(I.n);
        for (int i = 0; i < I.n; ++i) z[i] = x[i] / q;
        g.insert(std::move(z));
    }
    return MonomialIdeal::from_gens(I.n, g);
}

inline nlohmann::json to_json(const MonomialIdeal& I) {
    nlohmann::json j;
    j["n"] = I.n;
    j["gens"] = std::vector<IntVec>(I.gens.begin(), I.gens.end());
    return j;
}

inline MonomialIdeal monomial_ideal_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    auto raw = j.at("gens").get<std::vector<IntVec>>();
    return MonomialIdeal::from_gens(n, std::set<IntVec>(raw.begin(), raw.end()));
}

}

#endif
