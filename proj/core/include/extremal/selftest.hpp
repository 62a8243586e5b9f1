#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;       // worst observed error or residual
    double tolerance = 0.0;
    std::string detail;
};

struct SelftestOptions {
    std::uint64_t seed = 0;
    /// Multiplies every suite tolerance; a test hook (set to 0 to force
    /// failure and exercise the nonzero-exit path).
    double tolerance_scale = 1.0;
    /// Smaller corpora for quick runs.
    bool quick = false;
};

/// Runs the cross-module verification suites: Jensen consistency, the
/// Blaschke/Jensen identities, the fundamental inequality, the family
/// closed-form cross-checks, envelope stability under centre perturbation,
/// and a sandwich corpus. Returns one result per suite.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace extremal
