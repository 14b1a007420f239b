#ifndef FTHRESH_DETERMINANTAL_HPP
#define FTHRESH_DETERMINANTAL_HPP

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "family.hpp"
#include "test_ideal.hpp"

namespace fthresh {

/// A product of minors recorded by its multiset of sizes.
using MinorShape = std::vector<int>;  // entries in 1..m, kept sorted

/// gamma_k(shape) = sum over parts of max(0, size - k + 1): the symbolic-power
/// order of a product of minors along the size-k minor ideal.
inline long gamma(const MinorShape& shape, int k) {
    if (k < 1) throw InvalidParameter("gamma: k must be >= 1");
    long out = 0;
    for (int s : shape) {
        if (s < 1) throw InvalidParameter("gamma: part sizes must be >= 1");
        out += std::max(0, s - k + 1);
    }
    return out;
}

enum class ContainmentStatus { Contained, NotContained, Unknown };

struct ContainmentResult {
    ContainmentStatus status = ContainmentStatus::Unknown;
    std::optional<MinorShape> witness;  // set for NotContained
};

namespace detail {

template <typename Visit>
bool visit_shapes(int m, int max_parts, MinorShape& shape, int min_size, Visit&& visit) {
    if (!visit(shape)) return false;
    if (static_cast<int>(shape.size()) == max_parts) return true;
    for (int s = min_size; s <= m; ++s) {
        shape.push_back(s);
        if (!visit_shapes(m, max_parts, shape, s, visit)) return false;
        shape.pop_back();
    }
    return true;
}

}  // namespace detail

/// Does every product of minors lying in the w-intersection of symbolic
/// powers lie in the w'-intersection as well? Shapes are searched up to
/// `length_bound` parts (default: sum of w). A shape minimally satisfying
/// gamma >= w has at most sum(w) parts -- each part's removal must break some
/// coordinate k, and at most w_k parts can be charged to coordinate k -- so
/// the default bound makes the search complete and the answer Contained is
/// exact. A smaller explicit bound downgrades "no witness" to Unknown.
inline ContainmentResult gamma_containment(const IntVec& w, const IntVec& w_prime, int m,
                                           int length_bound = -1) {
    if (w.size() != w_prime.size() || static_cast<int>(w.size()) != m)
        throw DimensionMismatch("gamma_containment: vector lengths");
    long needed = 0;
    for (int v : w) {
        if (v < 0) throw InvalidParameter("gamma_containment: negative entry");
        needed += v;
    }
    for (int v : w_prime)
        if (v < 0) throw InvalidParameter("gamma_containment: negative entry");
    const int complete_bound = static_cast<int>(needed);
    const int bound = length_bound < 0 ? complete_bound : length_bound;

    ContainmentResult res;
    MinorShape shape;
    bool finished = detail::visit_shapes(m, bound, shape, 1, [&](const MinorShape& s) {
        for (int k = 1; k <= m; ++k)
            if (gamma(s, k) < w[k - 1]) return true;  // not in the w-intersection
        for (int k = 1; k <= m; ++k)
            if (gamma(s, k) < w_prime[k - 1]) {
                res.status = ContainmentStatus::NotContained;
                res.witness = s;
                return false;
            }
        return true;
    });
    if (!finished) return res;
    res.status = bound >= complete_bound ? ContainmentStatus::Contained : ContainmentStatus::Unknown;
    return res;
}

/// Containment oracle over the generic-matrix family; certifies only exact
/// Contained answers.
inline ContainmentOracle gamma_oracle(int m) {
    return [m](const IntVec& w, const IntVec& w2) {
        return gamma_containment(w, w2, m).status == ContainmentStatus::Contained;
    };
}

/// The minor ideals of an m x n generic matrix. Heights are the determinantal
/// codimensions (m-k+1)(n-k+1); the e-matrix row k is gamma_k on single-minor
/// shapes. A+/B are classical for this family and carried as asserted flags.
inline PrimeFamily preset_generic(int m, int n) {
    if (m < 1 || m > n) throw InvalidParameter("preset_generic: need 1 <= m <= n");
    PrimeFamily fam;
    fam.name = "generic:" + std::to_string(m) + "x" + std::to_string(n);
    fam.m = m;
    fam.heights.resize(m);
    fam.e_matrix.assign(m, std::vector<int>(m, 0));
    for (int k = 1; k <= m; ++k) {
        fam.heights[k - 1] = (m - k + 1) * (n - k + 1);
        for (int j = 1; j <= m; ++j) fam.e_matrix[k - 1][j - 1] = std::max(0, j - k + 1);
    }
    const std::string cite =
        "generic determinantal ideals: codimension and symbolic powers per "
        "Bruns-Vetter, Determinantal Rings; DeConcini-Eisenbud-Procesi";
    fam.cond_a = ConditionFlag::asserted(cite);
    fam.cond_a_plus = ConditionFlag::asserted(cite);
    fam.cond_b = ConditionFlag::asserted(cite);
    fam.containment_oracle = "gamma";
    fam.validate();
    return fam;
}

/// Symmetric and Pfaffian presets ship as config data with mandatory
/// provenance, not as code constants.
struct FamilyConfig {
    std::string kind;
    std::string provenance;
    std::vector<PrimeFamily> families;
};

inline FamilyConfig load_family_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open family config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ConfigError("bad JSON in family config " + path + ": " + ex.what());
    }
    FamilyConfig cfg;
    cfg.kind = j.at("kind").get<std::string>();
    if (!j.contains("provenance") || !j["provenance"].is_string() ||
        j["provenance"].get<std::string>().empty())
        throw ConfigError("family config " + path + " lacks a provenance string");
    cfg.provenance = j["provenance"].get<std::string>();
    for (const auto& fj : j.at("families")) cfg.families.push_back(family_from_json(fj));
    return cfg;
}

inline PrimeFamily preset_from_config(const std::string& path, int m) {
    const FamilyConfig cfg = load_family_config(path);
    for (const auto& fam : cfg.families)
        if (fam.m == m) return fam;
    throw ConfigError("family config " + path + " has no entry with m = " + std::to_string(m));
}

/// FTL_CONFIG_DIR, then the build-time default, then ./configs.
inline std::string default_config_dir() {
    if (const char* env = std::getenv("FTL_CONFIG_DIR")) return env;
#ifdef FTHRESH_DEFAULT_CONFIG_DIR
    return FTHRESH_DEFAULT_CONFIG_DIR;
#else
    return "configs";
#endif
}

inline PrimeFamily preset_symmetric(int m, const std::string& config_dir = default_config_dir()) {
    return preset_from_config(config_dir + "/symmetric.json", m);
}

inline PrimeFamily preset_pfaffian(int m, const std::string& config_dir = default_config_dir()) {
    return preset_from_config(config_dir + "/pfaffian.json", m);
}

}

#endif
