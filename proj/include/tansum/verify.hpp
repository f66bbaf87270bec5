#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tansum {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    /// Cap on candidates scanned by any single brute-force enumeration.
    std::uint64_t enumeration_budget = 10'000'000;
};

/// Exact identity sweeps: Eqs. (34), (36), (40), (41) and the order-(n-1)/2
/// linear relation among consecutive sigma values.
std::vector<CheckResult> run_identity_checks(const VerifyOptions& opts = {});

/// Numeric bound sweeps: Newman positivity and envelope, the sharp Coquet-type
/// bounds, lambda enclosures/monotonicity/reference values, characteristic roots.
std::vector<CheckResult> run_bounds_checks(const VerifyOptions& opts = {});

/// Cross-method oracles: recurrence vs. digit-sum enumeration vs. combinatorial
/// formula, interval sums, composition formulas vs. exhaustive counting,
/// polynomial tables, float cross-checks, asymptotic ratios.
std::vector<CheckResult> run_oracle_checks(const VerifyOptions& opts = {});

/// All three suites concatenated.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

}  // namespace tansum
