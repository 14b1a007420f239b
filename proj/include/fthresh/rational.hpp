#ifndef FTHRESH_RATIONAL_HPP
#define FTHRESH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fthresh {

// All arithmetic in this project is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using IntVec = std::vector<int>;

inline Int rat_floor(const Rational& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int rat_ceil(const Rational& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

inline long to_long(const Int& v) { return static_cast<long>(v); }

/// Canonical textual form "num/den", den > 0, always with the slash.
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "a/b" or a bare integer "a".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational literal: " + text);
    }
}

inline bool dominates(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dominates: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// Keep only the componentwise-minimal vectors.
inline std::set<IntVec> minimal_antichain(const std::set<IntVec>& vs) {
    std::set<IntVec> out;
    for (const auto& v : vs) {
        bool redundant = false;
        for (const auto& w : vs)
            if (w != v && dominates(v, w)) { redundant = true; break; }
        if (!redundant) out.insert(v);
    }
    return out;
}

}

#endif
