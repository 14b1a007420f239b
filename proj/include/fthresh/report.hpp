#ifndef FTHRESH_REPORT_HPP
#define FTHRESH_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "family.hpp"
#include "rational.hpp"
#include "test_ideal.hpp"

namespace fthresh {

/// Machine-readable command outcome. nlohmann's default object ordering is
/// sorted keys, so dump() is canonical; rationals are always "num/den".
struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> warnings;
    int exit_code = 0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["warnings"] = warnings;
        j["exit_code"] = exit_code;
        return j;
    }
};

inline std::string intvec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

/// Human rendering of a symbolic-power intersection, e.g. "I1^(1) ∩ I2^(2)".
inline std::string describe_intersection(const IntVec& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0) continue;
        if (!s.empty()) s += " ∩ ";
        s += "I" + std::to_string(k + 1) + "^(" + std::to_string(w[k]) + ")";
    }
    return s.empty() ? "(1)" : s;
}

inline std::string describe_ideal(const TestIdealDescription& d) {
    if (d.antichain.empty()) return "(0)";
    if (d.is_unit()) return "(1)";
    std::string s;
    for (const auto& w : d.antichain) {
        if (!s.empty()) s += " + ";
        s += describe_intersection(w);
    }
    return s;
}

inline nlohmann::json description_to_json(const TestIdealDescription& d) {
    nlohmann::json j;
    j["antichain"] = std::vector<IntVec>(d.antichain.begin(), d.antichain.end());
    j["family"] = d.family_ref;
    j["level"] = d.level == DescriptionLevel::Representation ? "representation" : "oracle_pruned";
    j["ideal"] = describe_ideal(d);
    j["is_unit"] = d.is_unit();
    return j;
}

/// One warning per condition flag that is not Verified; the closed forms are
/// only valid under the flagged hypotheses.
inline std::vector<std::string> condition_warnings(const PrimeFamily& fam, bool needs_a_plus) {
    std::vector<std::string> out;
    auto add = [&](const char* label, const ConditionFlag& f) {
        switch (f.status) {
            case ConditionFlag::Status::Verified:
                break;
            case ConditionFlag::Status::AssertedFromLiterature:
                out.push_back(std::string("condition ") + label +
                              " asserted from literature, not verified here (" + f.citation + ")");
                break;
            case ConditionFlag::Status::Unknown:
                out.push_back(std::string("condition ") + label +
                              " unknown: the closed-form output is conjectural for this family");
                break;
        }
    };
    add(needs_a_plus ? "A+" : "A", needs_a_plus ? fam.cond_a_plus : fam.cond_a);
    add("B", fam.cond_b);
    return out;
}

}

#endif
