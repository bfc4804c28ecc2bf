#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "starnoma/metrics.hpp"
#include "starnoma/system_config.hpp"

namespace starnoma {

/// Which configuration field a sweep drives.
enum class SweepAxis { eta, rho_db, n_total };

std::string to_string(SweepAxis axis);
bool sweep_axis_from_string(const std::string& text, SweepAxis& out);

/// A parameter sweep: evaluate the requested metrics at each axis value.
/// `values` must be nonempty and strictly increasing; `trials >= 1`.
struct SweepSpec {
    SweepAxis axis = SweepAxis::rho_db;
    std::vector<double> values;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    bool want_op = false;
    bool want_ec = false;
    SquaredMagnitude ec_kind = SquaredMagnitude::exact;
};

/// One grid point. Metrics that were not requested — or whose row was
/// quarantined because the axis value produced an invalid configuration —
/// are NaN.
struct SweepRow {
    static constexpr double unset = std::numeric_limits<double>::quiet_NaN();
    double axis_value = 0.0;
    int cris_elements = 0;
    int star_elements = 0;
    bool quarantined = false;
    std::string quarantine_reason;
    double op_indoor_ana = unset, op_indoor_mc = unset, op_indoor_se = unset;
    double op_outdoor_ana = unset, op_outdoor_mc = unset, op_outdoor_se = unset;
    double ec_indoor_ana = unset, ec_indoor_mc = unset, ec_indoor_se = unset;
    double ec_outdoor_ana = unset, ec_outdoor_mc = unset, ec_outdoor_se = unset;
    double sum_rate_ana = unset, sum_rate_mc = unset;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

/// Evaluates the sweep. Each grid point derives its own seed from the base
/// seed, the axis identity, and the axis value (never the point's index),
/// so any sub-range of values reproduces the corresponding rows of the full
/// sweep exactly. Invalid grid points are quarantined, not fatal.
/// Throws std::invalid_argument when `spec` itself violates its invariants
/// or when the base configuration is invalid.
SweepResult run_sweep(const SystemConfig& base, const SweepSpec& spec);

/// CSV with a fixed column order and 9-significant-digit floats; metric
/// column blocks appear only when the corresponding `want_*` flag was set.
void write_csv(std::ostream& os, const SweepResult& result);
void write_csv_file(const std::string& path, const SweepResult& result);

} // namespace starnoma
