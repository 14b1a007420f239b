#ifndef FTHRESH_FAMILY_HPP
#define FTHRESH_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace fthresh {

struct ConditionFlag {
    enum class Status { Verified, AssertedFromLiterature, Unknown };
    Status status = Status::Unknown;
    std::string citation;  // nonempty for AssertedFromLiterature

    static ConditionFlag verified() { return {Status::Verified, ""}; }
    static ConditionFlag asserted(std::string cite) {
        return {Status::AssertedFromLiterature, std::move(cite)};
    }
    static ConditionFlag unknown() { return {Status::Unknown, ""}; }

    bool operator==(const ConditionFlag&) const = default;
};

/// A fixed family of primes p_1..p_m, reduced to the data the calculus needs:
/// heights, the matrix of symbolic-power orders on unit vectors, and flags for
/// the convexity/initial-term hypotheses the closed forms depend on.
struct PrimeFamily {
    std::string name;
    int m = 0;
    std::vector<int> heights;                   // h_k >= 1
    std::vector<std::vector<int>> e_matrix;     // E[k][j] = order of p_j-power along p_k
    ConditionFlag cond_a, cond_a_plus, cond_b;
    std::optional<std::string> containment_oracle;

    void validate() const {
        if (m <= 0) throw InvalidParameter("PrimeFamily: m must be positive");
        if (static_cast<int>(heights.size()) != m || static_cast<int>(e_matrix.size()) != m)
            throw DimensionMismatch("PrimeFamily: heights/e_matrix size");
        for (int h : heights)
            if (h < 1) throw InvalidParameter("PrimeFamily: heights must be >= 1");
        for (int k = 0; k < m; ++k) {
            if (static_cast<int>(e_matrix[k].size()) != m)
                throw DimensionMismatch("PrimeFamily: e_matrix row size");
            if (e_matrix[k][k] < 1)
                throw InvalidParameter("PrimeFamily: diagonal of e_matrix must be >= 1");
            for (int v : e_matrix[k])
                if (v < 0) throw InvalidParameter("PrimeFamily: e_matrix entries must be >= 0");
        }
    }

    bool operator==(const PrimeFamily&) const = default;
};

/// e(sigma) = E * sigma, the symbolic-power order vector of p_1^s1 ... p_m^sm.
inline IntVec e_map(const PrimeFamily& family, const IntVec& sigma) {
    if (static_cast<int>(sigma.size()) != family.m)
        throw DimensionMismatch("e_map: sigma length");
    IntVec out(family.m, 0);
    for (int k = 0; k < family.m; ++k)
        for (int j = 0; j < family.m; ++j)
            out[k] += family.e_matrix[k][j] * sigma[j];
    return out;
}

// --- JSON (bit-exact round trip) ---

inline nlohmann::json to_json(const ConditionFlag& f) {
    switch (f.status) {
        case ConditionFlag::Status::Verified:
            return {{"status", "verified"}};
        case ConditionFlag::Status::AssertedFromLiterature:
            return {{"status", "asserted_from_literature"}, {"citation", f.citation}};
        default:
            return {{"status", "unknown"}};
    }
}

inline ConditionFlag condition_from_json(const nlohmann::json& j) {
    const std::string s = j.at("status").get<std::string>();
    if (s == "verified") return ConditionFlag::verified();
    if (s == "asserted_from_literature")
        return ConditionFlag::asserted(j.at("citation").get<std::string>());
    if (s == "unknown") return ConditionFlag::unknown();
    throw ConfigError("unknown condition status: " + s);
}

inline nlohmann::json to_json(const PrimeFamily& fam) {
    nlohmann::json j;
    j["name"] = fam.name;
    j["m"] = fam.m;
    j["heights"] = fam.heights;
    j["e_matrix"] = fam.e_matrix;
    j["conditions"] = {{"A", to_json(fam.cond_a)},
                       {"A_plus", to_json(fam.cond_a_plus)},
                       {"B", to_json(fam.cond_b)}};
    j["containment_oracle"] =
        fam.containment_oracle ? nlohmann::json(*fam.containment_oracle) : nlohmann::json(nullptr);
    return j;
}

inline PrimeFamily family_from_json(const nlohmann::json& j) {
    PrimeFamily fam;
    fam.name = j.at("name").get<std::string>();
    fam.m = j.at("m").get<int>();
    fam.heights = j.at("heights").get<std::vector<int>>();
    fam.e_matrix = j.at("e_matrix").get<std::vector<std::vector<int>>>();
    const auto& c = j.at("conditions");
    fam.cond_a = condition_from_json(c.at("A"));
    fam.cond_a_plus = condition_from_json(c.at("A_plus"));
    fam.cond_b = condition_from_json(c.at("B"));
    if (!j.at("containment_oracle").is_null())
        fam.containment_oracle = j.at("containment_oracle").get<std::string>();
    fam.validate();
    return fam;
}

}

#endif
