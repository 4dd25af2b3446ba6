#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qschur/actions.hpp"

namespace qschur {

/// Knobs shared by all verification suites. Window defaults depend on the
/// session: sampling draws entries from [1-2n, 3n] and exhaustive passes
/// enumerate [1-2n, 2n] whenever that window holds at most 5000 tuples.
struct SuiteConfig {
    int n = 2;
    int r = 2;
    std::optional<int> N;       // truncation target; schur-functor suite only
    std::optional<int> lprime;  // absent = generic coefficients
    long trials = 100;
    std::uint64_t seed = 0;
    std::optional<long long> window_lo;
    std::optional<long long> window_hi;
    int support_bound = 6;
    int coeff_bound = 3;
    bool enable_affine_node = false;
    /// Harness self-test: perturb one T-action coefficient so the relation
    /// suites must fail. Never set outside sensitivity tests.
    bool sabotage_t = false;

    long long resolved_window_lo() const { return window_lo ? *window_lo : 1 - 2LL * n; }
    long long resolved_window_hi() const { return window_hi ? *window_hi : 3LL * n; }

    Session session() const;
    nlohmann::json to_json() const;
};

struct IdentityResult {
    std::string id;
    std::string anchor;            // the identity being checked, in formula form
    std::string status = "pass";   // "pass" | "fail" | "skipped"
    long trials = 0;
    nlohmann::json counterexample; // null unless status == "fail" (or observational)

    nlohmann::json to_json() const;
};

/// Machine-readable outcome of one suite run. Deterministic: a fixed
/// SuiteConfig always produces byte-identical JSON.
struct VerificationReport {
    std::string suite;
    nlohmann::json config;
    std::vector<IdentityResult> results;

    bool all_pass() const;
    long fail_count() const;
    nlohmann::json to_json() const;
};

VerificationReport verify_hecke_presentation(const SuiteConfig& cfg);
VerificationReport verify_bimodule_commutation(const SuiteConfig& cfg);
VerificationReport verify_weight_idempotents(const SuiteConfig& cfg);
VerificationReport verify_level_zero_qla(const SuiteConfig& cfg);
VerificationReport verify_qcomb_lemmas(const SuiteConfig& cfg);
VerificationReport verify_schur_functor(const SuiteConfig& cfg);
VerificationReport verify_specialization_naturality(const SuiteConfig& cfg);

/// Dispatch by suite name as used by the CLI: hecke, bimodule, idempotents,
/// qla, qcomb, schur-functor, specialization.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);
const std::vector<std::string>& suite_names();

struct CriterionOutcome {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct AcceptanceOutcome {
    std::vector<CriterionOutcome> criteria;
    std::vector<VerificationReport> reports;
    bool all_pass = false;
};

/// The full pinned acceptance matrix; streams one line per criterion to
/// `progress` when given.
AcceptanceOutcome run_acceptance_criteria(std::ostream* progress = nullptr);

}  // namespace qschur
