#include "starnoma/sweep.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "starnoma/moment_matching.hpp"
#include "starnoma/rng.hpp"

namespace starnoma {

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::eta: return "eta";
        case SweepAxis::rho_db: return "rho_db";
        case SweepAxis::n_total: return "n_total";
    }
    return "?";
}

bool sweep_axis_from_string(const std::string& text, SweepAxis& out) {
    if (text == "eta" || text == "split_factor") { out = SweepAxis::eta; return true; }
    if (text == "rho_db") { out = SweepAxis::rho_db; return true; }
    if (text == "n_total") { out = SweepAxis::n_total; return true; }
    return false;
}

namespace {

std::uint64_t axis_tag(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::eta: return 1;
        case SweepAxis::rho_db: return 2;
        case SweepAxis::n_total: return 3;
    }
    return 0;
}

// Empty on success, otherwise the reason the value cannot be applied.
std::string apply_axis(SystemConfig& cfg, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::eta:
            cfg.split_factor = value;
            return {};
        case SweepAxis::rho_db:
            cfg.rho_db = value;
            return {};
        case SweepAxis::n_total:
            if (!(value >= 0.0) || value != std::floor(value) || value > 1e6) {
                return "n_total must be a nonnegative integer";
            }
            cfg.n_total = static_cast<int>(value);
            return {};
    }
    return "unknown axis";
}

void check_spec(const SweepSpec& spec) {
    if (spec.values.empty()) {
        throw std::invalid_argument("sweep: values must be nonempty");
    }
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        if (!(spec.values[i] > spec.values[i - 1])) {
            throw std::invalid_argument("sweep: values must be strictly increasing");
        }
    }
    if (spec.trials < 1) {
        throw std::invalid_argument("sweep: trials must be at least 1");
    }
}

} // namespace

SweepResult run_sweep(const SystemConfig& base, const SweepSpec& spec) {
    check_spec(spec);
    require_valid(base);

    SweepResult result;
    result.spec = spec;
    result.rows.reserve(spec.values.size());
    for (const double value : spec.values) {
        SweepRow row;
        row.axis_value = value;

        SystemConfig cfg = base;
        std::string problem = apply_axis(cfg, spec.axis, value);
        if (problem.empty()) {
            const auto violations = validate_config(cfg);
            if (!violations.empty()) {
                std::ostringstream os;
                os << "invalid at this axis value:";
                for (const auto& v : violations) os << " [" << v << "]";
                problem = os.str();
            }
        }
        row.cris_elements = problem.empty() ? cfg.cris_elements() : 0;
        row.star_elements = problem.empty() ? cfg.star_elements() : 0;
        if (!problem.empty()) {
            row.quarantined = true;
            row.quarantine_reason = problem;
            result.rows.push_back(std::move(row));
            continue;
        }

        // Seeds depend on the axis value itself, not its index, so rows are
        // identical whether computed alone or as part of a larger grid.
        const std::uint64_t point_seed = combine_seed(
            combine_seed(spec.seed, axis_tag(spec.axis)),
            std::bit_cast<std::uint64_t>(value));

        const auto fit_i = fit_h_indoor(cfg);
        const auto fit_o = fit_h_outdoor(cfg);
        EmpiricalMetrics mc;
        if (spec.want_op || spec.want_ec) {
            mc = empirical_metrics(cfg, sample_magnitudes(cfg, spec.trials, point_seed));
        }
        if (spec.want_op) {
            const OutagePair op = op_analytical(cfg, fit_i, fit_o);
            row.op_indoor_ana = op.indoor;
            row.op_outdoor_ana = op.outdoor;
            row.op_indoor_mc = mc.op_indoor;
            row.op_outdoor_mc = mc.op_outdoor;
            row.op_indoor_se = mc.op_indoor_se;
            row.op_outdoor_se = mc.op_outdoor_se;
        }
        if (spec.want_ec) {
            const RatePair ec = ec_analytical(cfg, fit_i, fit_o, spec.ec_kind);
            row.ec_indoor_ana = ec.indoor;
            row.ec_outdoor_ana = ec.outdoor;
            row.ec_indoor_mc = mc.ec_indoor;
            row.ec_outdoor_mc = mc.ec_outdoor;
            row.ec_indoor_se = mc.ec_indoor_se;
            row.ec_outdoor_se = mc.ec_outdoor_se;
            row.sum_rate_ana = ec.indoor + ec.outdoor;
            row.sum_rate_mc = mc.ec_indoor + mc.ec_outdoor;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

namespace {

void put(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    os << ',' << buf;
}

} // namespace

void write_csv(std::ostream& os, const SweepResult& result) {
    os << "axis_name,axis_value,n_c,n_s";
    if (result.spec.want_op) {
        os << ",op_i_ana,op_i_mc,op_i_se,op_o_ana,op_o_mc,op_o_se";
    }
    if (result.spec.want_ec) {
        os << ",ec_i_ana,ec_i_mc,ec_i_se,ec_o_ana,ec_o_mc,ec_o_se"
              ",sum_rate_ana,sum_rate_mc";
    }
    os << '\n';
    const std::string axis = to_string(result.spec.axis);
    for (const SweepRow& r : result.rows) {
        os << axis;
        put(os, r.axis_value);
        os << ',' << r.cris_elements << ',' << r.star_elements;
        if (result.spec.want_op) {
            put(os, r.op_indoor_ana);
            put(os, r.op_indoor_mc);
            put(os, r.op_indoor_se);
            put(os, r.op_outdoor_ana);
            put(os, r.op_outdoor_mc);
            put(os, r.op_outdoor_se);
        }
        if (result.spec.want_ec) {
            put(os, r.ec_indoor_ana);
            put(os, r.ec_indoor_mc);
            put(os, r.ec_indoor_se);
            put(os, r.ec_outdoor_ana);
            put(os, r.ec_outdoor_mc);
            put(os, r.ec_outdoor_se);
            put(os, r.sum_rate_ana);
            put(os, r.sum_rate_mc);
        }
        os << '\n';
    }
}

void write_csv_file(const std::string& path, const SweepResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_csv(out, result);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed while writing '" + path + "'");
    }
}

} // namespace starnoma
