// Machine-readable registry of the identity and same-ODE claims, with
// verification modes and a deterministic sampling driver.
#pragma once

#include <functional>

#include "appell/derive.hpp"
#include "appell/expr.hpp"

namespace appell {

enum class VerifyMode { exact, proportional, same_ode, solves_system, expect_fail };
std::string verify_mode_name(VerifyMode m);

using ParamMap = std::map<std::string, Rat>;

struct ParamSpec {
    enum class Kind { free_rat, free_int, derived } kind;
    std::string name;
    long lo = 0, hi = 0;  // free_int range
    std::function<Rat(const ParamMap&)> derive;
};

ParamSpec free_rat(std::string name);
ParamSpec free_int(std::string name, long lo, long hi);
ParamSpec derived(std::string name, std::function<Rat(const ParamMap&)> fn);

struct CheckOutcome {
    bool pass;
    std::string detail;
};

struct IdentityRecord {
    std::string id;
    VerifyMode mode;
    int order = 8;  // default truncation / comparison degree
    std::vector<ParamSpec> params;
    std::function<bool(const ParamMap&)> admissible;

    // Textual sides in the expression grammar (exact/proportional/expect_fail).
    std::string lhs, rhs;
    std::vector<std::string> lhs_vars{"t"}, rhs_vars{"t"};
    bool check_term_counts = false;  // terminating calls must have (k+1)(l+1) terms

    // Programmatic check (same_ode, solves_system, and special records).
    std::function<CheckOutcome(const ParamMap&, int)> checker;

    std::string provenance;   // short label of the underlying fact
    std::string constraints;  // parameter relations, human-readable
};

struct VerificationReport {
    std::string id;
    ParamMap sample;
    std::string outcome;  // pass | fail | rejected
    std::string detail;
    double ms = 0;

    bool passed() const { return outcome == "pass"; }
    bool rejected() const { return outcome == "rejected"; }
};

const std::vector<IdentityRecord>& catalog_entries();
const IdentityRecord* catalog_find(const std::string& id);

// Deterministic: same seed, same record, same samples. Numerators and
// denominators of free rationals are bounded by 20; degenerate draws are
// rejected by the record's admissibility predicate.
std::vector<ParamMap> sample_parameters(const IdentityRecord& rec, uint64_t seed, int count);

VerificationReport verify_identity(const IdentityRecord& rec, const ParamMap& sample,
                                   int order_override = 0);

std::string catalog_list_json();
std::string report_to_json(const VerificationReport& r);
std::string params_str(const ParamMap& m);

// Shared by the catalog and tests: rational-function text with parameter
// identifiers substituted from the map (variable "t").
RatFunc curve_component(const std::string& text, const ParamMap& m);

}  // namespace appell
