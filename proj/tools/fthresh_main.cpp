// Command-line driver: family presets, tau/fpt/jumping-number computation and
// the verification suites, with deterministic JSON or aligned-text reports.

#include <cstdlib>
#include <iostream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fthresh/determinantal.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/family.hpp"
#include "fthresh/newton.hpp"
#include "fthresh/report.hpp"
#include "fthresh/test_ideal.hpp"
#include "fthresh/verify.hpp"

namespace {

using namespace fthresh;

PrimeFamily resolve_family(const std::string& source, const std::string& config_dir) {
    auto colon = source.find(':');
    if (colon != std::string::npos) {
        const std::string kind = source.substr(0, colon);
        const std::string arg = source.substr(colon + 1);
        if (kind == "monomial") return monomial_family(std::stoi(arg));
        if (kind == "generic") {
            auto x = arg.find('x');
            if (x == std::string::npos) throw ParseError("expected generic:MxN");
            return preset_generic(std::stoi(arg.substr(0, x)), std::stoi(arg.substr(x + 1)));
        }
        if (kind == "symmetric") return preset_symmetric(std::stoi(arg), config_dir);
        if (kind == "pfaffian") return preset_pfaffian(std::stoi(arg), config_dir);
    }
    // otherwise a path to a family JSON document
    std::ifstream in(source);
    if (!in) throw ParseError("unknown family preset or unreadable file: " + source);
    nlohmann::json j;
    in >> j;
    return family_from_json(j);
}

ContainmentOracle resolve_oracle(const PrimeFamily& fam) {
    if (!fam.containment_oracle) return nullptr;
    if (*fam.containment_oracle == "monomial") return monomial_oracle();
    if (*fam.containment_oracle == "gamma") return gamma_oracle(fam.m);
    throw ConfigError("unknown containment oracle: " + *fam.containment_oracle);
}

IntVec parse_intvec(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw ParseError("empty integer vector: " + text);
    return out;
}

SigmaSet parse_sigma_set(const std::string& text) {
    SigmaSet out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.insert(parse_intvec(tok));
    if (out.empty()) throw ParseError("empty sigma set: " + text);
    return out;
}

void emit(const Report& report, bool as_json) {
    if (as_json) {
        std::cout << report.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "command: " << report.command << "\n";
    for (auto it = report.results.begin(); it != report.results.end(); ++it) {
        std::cout << "  " << it.key() << ": ";
        if (it.value().is_string())
            std::cout << it.value().get<std::string>();
        else
            std::cout << it.value().dump();
        std::cout << "\n";
    }
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
}

struct CommonArgs {
    std::string family_source;
    std::string sigma_text, sigma_set_text;
    std::string config_dir = default_config_dir();
    std::string format = "text";
    bool json = false;
    bool prune = false;

    bool as_json() const { return json || format == "json"; }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_sigma = true) {
    cmd->add_option("--family", args.family_source,
                    "family preset (monomial:N, generic:MxN, symmetric:M, pfaffian:M) or a "
                    "family JSON file")
        ->required();
    if (with_sigma) {
        cmd->add_option("--sigma", args.sigma_text, "exponent vector, e.g. 1,1");
        cmd->add_option("--Sigma", args.sigma_set_text, "set of exponent vectors, e.g. 2,0;0,2");
    }
    cmd->add_option("--config-dir", args.config_dir, "directory with the preset config files");
    cmd->add_option("--format", args.format, "output mode: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--json", args.json, "shorthand for --format json");
    cmd->add_flag("--prune", args.prune, "prune antichains with the family's containment oracle");
}

SigmaSet sigma_set_of(const CommonArgs& args, const PrimeFamily& fam) {
    if (!args.sigma_text.empty() && !args.sigma_set_text.empty())
        throw ParseError("--sigma and --Sigma are mutually exclusive");
    if (!args.sigma_text.empty()) return {parse_intvec(args.sigma_text)};
    if (!args.sigma_set_text.empty()) return parse_sigma_set(args.sigma_set_text);
    throw ParseError("one of --sigma / --Sigma is required");
}

int run_tau(const CommonArgs& args, const std::string& lambda_text) {
    const PrimeFamily fam = resolve_family(args.family_source, args.config_dir);
    const Rational lambda = parse_rational(lambda_text);
    const SigmaSet Sigma = sigma_set_of(args, fam);
    auto oracle = args.prune ? resolve_oracle(fam) : nullptr;
    const TestIdealDescription d = tau_sum(fam, Sigma, lambda, oracle);
    Report report;
    report.command = "tau";
    report.inputs = {{"family", to_json(fam)},
                     {"Sigma", std::vector<IntVec>(Sigma.begin(), Sigma.end())},
                     {"lambda", format_rational(lambda)}};
    report.results = description_to_json(d);
    report.warnings = condition_warnings(fam, Sigma.size() > 1);
    emit(report, args.as_json());
    return 0;
}

int run_fpt(const CommonArgs& args) {
    const PrimeFamily fam = resolve_family(args.family_source, args.config_dir);
    const SigmaSet Sigma = sigma_set_of(args, fam);
    Report report;
    report.command = "fpt";
    report.inputs = {{"family", to_json(fam)},
                     {"Sigma", std::vector<IntVec>(Sigma.begin(), Sigma.end())}};
    std::optional<Rational> fpt;
    if (Sigma.size() == 1)
        fpt = fpt_power(fam, *Sigma.begin());
    else
        fpt = fpt_sum(fam, Sigma);
    report.results["fpt"] = fpt ? format_rational(*fpt) : "infinity";
    report.warnings = condition_warnings(fam, Sigma.size() > 1);
    emit(report, args.as_json());
    return 0;
}

int run_jumps(const CommonArgs& args, const std::string& limit_text) {
    const PrimeFamily fam = resolve_family(args.family_source, args.config_dir);
    const Rational limit = parse_rational(limit_text);
    const SigmaSet Sigma = sigma_set_of(args, fam);
    auto oracle = args.prune ? resolve_oracle(fam) : nullptr;
    const auto jumps = jumping_numbers_sum(fam, Sigma, limit, oracle);
    Report report;
    report.command = "jumps";
    report.inputs = {{"family", to_json(fam)},
                     {"Sigma", std::vector<IntVec>(Sigma.begin(), Sigma.end())},
                     {"limit", format_rational(limit)}};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        nlohmann::json row;
        row["lambda"] = format_rational(jumps[i].first);
        row["tau"] = description_to_json(jumps[i].second);
        // half-open interval on which this tau persists
        row["interval"] = "[" + format_rational(jumps[i].first) + ", " +
                          (i + 1 < jumps.size() ? format_rational(jumps[i + 1].first) : "...") +
                          ")";
        rows.push_back(row);
    }
    report.results["jumping_numbers"] = rows;
    report.results["count"] = jumps.size();
    report.warnings = condition_warnings(fam, Sigma.size() > 1);
    if (args.as_json()) {
        emit(report, true);
        return 0;
    }
    std::cout << "command: jumps\n";
    std::size_t lam_w = 6, int_w = 8;
    for (const auto& row : rows) {
        lam_w = std::max(lam_w, row["lambda"].get<std::string>().size());
        int_w = std::max(int_w, row["interval"].get<std::string>().size());
    }
    std::cout << "  " << std::left << std::setw(static_cast<int>(lam_w) + 2) << "lambda"
              << std::setw(static_cast<int>(int_w) + 2) << "interval" << "tau\n";
    for (const auto& row : rows)
        std::cout << "  " << std::setw(static_cast<int>(lam_w) + 2)
                  << row["lambda"].get<std::string>() << std::setw(static_cast<int>(int_w) + 2)
                  << row["interval"].get<std::string>()
                  << row["tau"]["ideal"].get<std::string>() << "\n";
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    return 0;
}

int run_verify(const std::string& suite, unsigned seed, int count, const std::string& p_list_text,
               int e_max, int max_mn, int n, bool as_json) {
    SuiteResult res;
    if (suite == "monomial-oracle") {
        std::vector<int> ps;
        for (const auto& tok : [&] {
                 std::vector<std::string> v;
                 std::stringstream ss(p_list_text);
                 std::string t;
                 while (std::getline(ss, t, ',')) v.push_back(t);
                 return v;
             }())
            ps.push_back(std::stoi(tok));
        res = monomial_oracle_suite(seed, count, ps, e_max);
    } else if (suite == "aplus") {
        res = aplus_suite(seed, count);
    } else if (suite == "delta") {
        res = delta_suite(max_mn);
    } else if (suite == "cf-closure") {
        res = cf_closure_suite(n);
    } else if (suite == "gamma-linearity") {
        res = gamma_linearity_suite(seed, count);
    } else {
        throw ParseError("unknown suite: " + suite);
    }
    Report report;
    report.command = "verify " + suite;
    report.inputs = {{"seed", seed}, {"count", count}};
    report.results = res.details;
    report.results["suite"] = res.suite;
    report.results["pass"] = res.pass;
    report.results["cases"] = res.cases;
    report.results["failures"] = res.failures;
    report.exit_code = res.pass ? 0 : 1;
    emit(report, as_json);
    if (!res.pass)
        for (const auto& f : res.failures) std::cerr << "failure: " << f << "\n";
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-threshold calculator for sums of products of a fixed prime family"};
    app.require_subcommand(1);

    CommonArgs tau_args, fpt_args, jumps_args;
    std::string lambda_text, limit_text;

    auto* tau_cmd = app.add_subcommand("tau", "test ideal tau(lambda * I(Sigma))");
    add_common(tau_cmd, tau_args);
    tau_cmd->add_option("--lambda", lambda_text, "coefficient, rational literal a/b")->required();

    auto* fpt_cmd = app.add_subcommand("fpt", "F-pure threshold");
    add_common(fpt_cmd, fpt_args);

    auto* jumps_cmd = app.add_subcommand("jumps", "F-jumping numbers up to a limit");
    add_common(jumps_cmd, jumps_args);
    jumps_cmd->add_option("--limit", limit_text, "upper bound, rational literal a/b")->required();

    std::string suite, p_list_text = "2,3,5";
    unsigned seed = 42;
    int count = 100, e_max = 7, max_mn = 6, n_vars = 2;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("suite", suite,
                     "one of: monomial-oracle, aplus, delta, cf-closure, gamma-linearity")
        ->required();
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--count", count, "number of random cases");
    verify_cmd->add_option("--p-list", p_list_text, "comma-separated primes");
    verify_cmd->add_option("--e-max", e_max, "largest Frobenius exponent");
    verify_cmd->add_option("--max", max_mn, "largest matrix size for the delta suite");
    verify_cmd->add_option("--n", n_vars, "variable count for the cf-closure suite");
    std::string verify_format = "text";
    verify_cmd->add_option("--format", verify_format, "output mode: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--json", verify_json, "shorthand for --format json");

    try {
        app.parse(argc, argv);
        if (*tau_cmd) return run_tau(tau_args, lambda_text);
        if (*fpt_cmd) return run_fpt(fpt_args);
        if (*jumps_cmd) return run_jumps(jumps_args, limit_text);
        if (*verify_cmd)
            return run_verify(suite, seed, count, p_list_text, e_max, max_mn, n_vars,
                              verify_json || verify_format == "json");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const fthresh::CostLimit& e) {
        std::cerr << "cost limit: " << e.what() << "\n";
        return 3;
    } catch (const fthresh::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
