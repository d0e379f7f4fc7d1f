#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repfact::claims {

using Params = std::map<std::string, std::int64_t>;

/// One concrete data point backing a pass, or a counterexample on failure.
struct Witness {
    std::string sequence; // word family or object the witness lives in
    std::int64_t i = 0;
    std::int64_t n = 0;
    std::string detail;
};

struct ClaimReport {
    std::string claim_id;
    Params parameters;
    bool pass = false;
    std::vector<Witness> witnesses;
    double runtime_seconds = 0.0;

    /// Stable JSON document; identical for identical parameters except for
    /// the runtime field, which is emitted last.
    std::string to_json() const;
};

struct ClaimInfo {
    std::string id;
    std::string description;
    std::string statement; // the property checked, in full
};

/// Sorted, duplicate-free registry listing.
std::vector<ClaimInfo> enumerate_claims();

/// Runs one registered claim with its default bounds, overridden by any
/// entries in overrides. Unknown ids are rejected with the list of valid
/// ones; unknown override keys are rejected as well. A failing report
/// always carries at least one counterexample witness.
ClaimReport run_claim(const std::string& claim_id, const Params& overrides = {});

/// Default parameters of a claim (the keys accepted as overrides).
Params claim_defaults(const std::string& claim_id);

} // namespace repfact::claims
