#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starnoma/system_config.hpp"

namespace starnoma {

/// One self-check: `value <= limit` passes.
struct ValidationCheck {
    std::string name;
    double value = 0.0;
    double limit = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
};

/// Runs the fit self-checks for one configuration against a fresh batch of
/// `trials` realizations: exact moment-inversion roundtrips, agreement of
/// the reduced closed-form parameter expressions with the moment pipeline
/// (where the reduction applies), KS distance of the sampled magnitudes
/// against the fitted laws with a finite-sample allowance, sample-mean
/// agreement within the documented approximation accuracy, and the
/// direction of the mean-power rate approximation. Structurally zero
/// channels are instead checked to produce exactly zero samples.
ValidationReport validation_report(const SystemConfig& cfg,
                                   std::uint64_t trials, std::uint64_t seed);

/// Fixed-width pass/fail table with an overall verdict line.
std::string format_report(const ValidationReport& report);

} // namespace starnoma
