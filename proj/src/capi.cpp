#include "starnoma.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "starnoma/config_io.hpp"
#include "starnoma/metrics.hpp"
#include "starnoma/moment_matching.hpp"
#include "starnoma/sweep.hpp"
#include "starnoma/system_config.hpp"
#include "starnoma/validate.hpp"

struct sn_config {
    starnoma::SystemConfig cfg;
};

namespace {

thread_local std::string g_last_error;

sn_status fail(sn_status code, std::string message) {
    g_last_error = std::move(message);
    return code;
}

sn_status fail_diags(sn_status code, const std::vector<starnoma::ParseDiagnostic>& diags) {
    std::ostringstream os;
    for (std::size_t i = 0; i < diags.size(); ++i) {
        if (i) os << "; ";
        if (diags[i].line > 0) os << "line " << diags[i].line << ": ";
        os << diags[i].message;
    }
    return fail(code, os.str());
}

// Runs `body` with the standard exception-to-status mapping.
template <typename Fn>
sn_status guarded(Fn&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return fail(SN_ERR_CONSTRAINT, e.what());
    } catch (const std::domain_error& e) {
        return fail(SN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(SN_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SN_ERR_INTERNAL, e.what());
    }
}

bool copy_out(const std::string& text, char* buf, size_t buflen) {
    if (!buf || buflen == 0) return false;
    const size_t n = text.size() < buflen - 1 ? text.size() : buflen - 1;
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
    return true;
}

} // namespace

extern "C" {

const char* sn_version(void) { return "1.0.0"; }

const char* sn_last_error(void) { return g_last_error.c_str(); }

sn_status sn_config_create_default(sn_config** out) {
    if (!out) return fail(SN_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *out = new sn_config{starnoma::default_config()};
        return SN_OK;
    });
}

sn_status sn_config_load(const char* path, sn_config** out) {
    if (!path || !out) return fail(SN_ERR_INVALID_ARGUMENT, "path/out is null");
    return guarded([&]() -> sn_status {
        auto parsed = starnoma::load_config_file(path, starnoma::default_config());
        if (!parsed.config) {
            const bool io = parsed.errors.size() == 1 && parsed.errors[0].line == 0;
            return fail_diags(io ? SN_ERR_IO : SN_ERR_PARSE, parsed.errors);
        }
        *out = new sn_config{*parsed.config};
        return SN_OK;
    });
}

sn_status sn_config_parse(const char* text, sn_config** out) {
    if (!text || !out) return fail(SN_ERR_INVALID_ARGUMENT, "text/out is null");
    return guarded([&]() -> sn_status {
        auto parsed = starnoma::parse_config_text(text, starnoma::default_config());
        if (!parsed.config) return fail_diags(SN_ERR_PARSE, parsed.errors);
        *out = new sn_config{*parsed.config};
        return SN_OK;
    });
}

void sn_config_destroy(sn_config* cfg) { delete cfg; }

sn_status sn_config_set(sn_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) {
        return fail(SN_ERR_INVALID_ARGUMENT, "cfg/key/value is null");
    }
    return guarded([&]() -> sn_status {
        const std::string line = std::string(key) + " = " + value;
        auto parsed = starnoma::parse_config_text(line, cfg->cfg);
        if (!parsed.config) return fail_diags(SN_ERR_PARSE, parsed.errors);
        cfg->cfg = *parsed.config;
        return SN_OK;
    });
}

sn_status sn_config_get(const sn_config* cfg, const char* key, char* buf,
                        size_t buflen) {
    if (!cfg || !key || !buf || buflen == 0) {
        return fail(SN_ERR_INVALID_ARGUMENT, "cfg/key/buf is null or empty");
    }
    return guarded([&]() -> sn_status {
        // The canonical dump contains every key exactly once.
        const std::string text = starnoma::config_to_text(cfg->cfg);
        std::istringstream in(text);
        std::string line;
        const std::string wanted(key);
        while (std::getline(in, line)) {
            const auto eq = line.find(" = ");
            if (eq == std::string::npos) continue;
            if (line.substr(0, eq) != wanted) continue;
            if (!copy_out(line.substr(eq + 3), buf, buflen)) {
                return fail(SN_ERR_INVALID_ARGUMENT, "buffer too small");
            }
            return SN_OK;
        }
        return fail(SN_ERR_INVALID_ARGUMENT,
                    "unknown key '" + wanted + "'");
    });
}

sn_status sn_config_validate(const sn_config* cfg) {
    if (!cfg) return fail(SN_ERR_INVALID_ARGUMENT, "cfg is null");
    return guarded([&]() -> sn_status {
        const auto violations = starnoma::validate_config(cfg->cfg);
        if (violations.empty()) return SN_OK;
        std::ostringstream os;
        os << "violated:";
        for (const auto& v : violations) os << " [" << v << "]";
        return fail(SN_ERR_CONSTRAINT, os.str());
    });
}

sn_status sn_config_elements(const sn_config* cfg, int32_t* n_cris,
                             int32_t* n_star) {
    if (!cfg || !n_cris || !n_star) {
        return fail(SN_ERR_INVALID_ARGUMENT, "cfg/n_cris/n_star is null");
    }
    *n_cris = cfg->cfg.cris_elements();
    *n_star = cfg->cfg.star_elements();
    return SN_OK;
}

namespace {

sn_status fit_common(const sn_config* cfg, double* shape, double* scale,
                     int* has_fit, bool indoor) {
    if (!cfg || !shape || !scale || !has_fit) {
        return fail(SN_ERR_INVALID_ARGUMENT, "null output argument");
    }
    return guarded([&]() -> sn_status {
        starnoma::require_valid(cfg->cfg);
        const auto fit = indoor ? starnoma::fit_h_indoor(cfg->cfg)
                                : starnoma::fit_h_outdoor(cfg->cfg);
        *has_fit = fit.has_value() ? 1 : 0;
        *shape = fit ? fit->shape : 0.0;
        *scale = fit ? fit->scale : 0.0;
        return SN_OK;
    });
}

} // namespace

sn_status sn_fit_indoor(const sn_config* cfg, double* shape, double* scale,
                        int* has_fit) {
    return fit_common(cfg, shape, scale, has_fit, true);
}

sn_status sn_fit_outdoor(const sn_config* cfg, double* shape, double* scale,
                         int* has_fit) {
    return fit_common(cfg, shape, scale, has_fit, false);
}

sn_status sn_op_analytical(const sn_config* cfg, double* op_indoor,
                           double* op_outdoor) {
    if (!cfg || !op_indoor || !op_outdoor) {
        return fail(SN_ERR_INVALID_ARGUMENT, "null output argument");
    }
    return guarded([&] {
        starnoma::require_valid(cfg->cfg);
        const starnoma::OutagePair op = starnoma::op_analytical(cfg->cfg);
        *op_indoor = op.indoor;
        *op_outdoor = op.outdoor;
        return SN_OK;
    });
}

sn_status sn_ec_analytical(const sn_config* cfg, int exact_second_moment,
                           double* ec_indoor, double* ec_outdoor) {
    if (!cfg || !ec_indoor || !ec_outdoor) {
        return fail(SN_ERR_INVALID_ARGUMENT, "null output argument");
    }
    return guarded([&] {
        starnoma::require_valid(cfg->cfg);
        const starnoma::RatePair ec = starnoma::ec_analytical(
            cfg->cfg, exact_second_moment
                          ? starnoma::SquaredMagnitude::exact
                          : starnoma::SquaredMagnitude::large_shape);
        *ec_indoor = ec.indoor;
        *ec_outdoor = ec.outdoor;
        return SN_OK;
    });
}

sn_status sn_simulate(const sn_config* cfg, uint64_t trials, uint64_t seed,
                      sn_empirical* out) {
    if (!cfg || !out) return fail(SN_ERR_INVALID_ARGUMENT, "cfg/out is null");
    if (trials == 0) return fail(SN_ERR_INVALID_ARGUMENT, "trials must be >= 1");
    return guarded([&] {
        starnoma::require_valid(cfg->cfg);
        const starnoma::EmpiricalMetrics m =
            starnoma::simulate_metrics(cfg->cfg, trials, seed);
        out->op_indoor = m.op_indoor;
        out->op_outdoor = m.op_outdoor;
        out->op_indoor_se = m.op_indoor_se;
        out->op_outdoor_se = m.op_outdoor_se;
        out->ec_indoor = m.ec_indoor;
        out->ec_outdoor = m.ec_outdoor;
        out->ec_indoor_se = m.ec_indoor_se;
        out->ec_outdoor_se = m.ec_outdoor_se;
        out->trials = m.trials;
        return SN_OK;
    });
}

sn_status sn_sweep_csv(const sn_config* cfg, const char* axis,
                       const double* values, size_t n_values, uint64_t trials,
                       uint64_t seed, int want_op, int want_ec,
                       const char* out_path) {
    if (!cfg || !axis || !values || !out_path) {
        return fail(SN_ERR_INVALID_ARGUMENT, "null argument");
    }
    starnoma::SweepSpec spec;
    if (!starnoma::sweep_axis_from_string(axis, spec.axis)) {
        return fail(SN_ERR_INVALID_ARGUMENT,
                    std::string("unknown axis '") + axis + "'");
    }
    spec.values.assign(values, values + n_values);
    spec.trials = trials;
    spec.seed = seed;
    spec.want_op = want_op != 0;
    spec.want_ec = want_ec != 0;
    return guarded([&]() -> sn_status {
        const starnoma::SweepResult result = starnoma::run_sweep(cfg->cfg, spec);
        try {
            starnoma::write_csv_file(out_path, result);
        } catch (const std::runtime_error& e) {
            return fail(SN_ERR_IO, e.what());
        }
        return SN_OK;
    });
}

sn_status sn_validate_report(const sn_config* cfg, uint64_t trials,
                             uint64_t seed, int* all_pass, char* buf,
                             size_t buflen, size_t* needed) {
    if (!cfg) return fail(SN_ERR_INVALID_ARGUMENT, "cfg is null");
    if (trials == 0) return fail(SN_ERR_INVALID_ARGUMENT, "trials must be >= 1");
    // all_pass, buf and needed are all optional so a sizing call can pass
    // null for everything except needed.
    return guarded([&] {
        const starnoma::ValidationReport rep =
            starnoma::validation_report(cfg->cfg, trials, seed);
        const std::string text = starnoma::format_report(rep);
        if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
        if (needed) *needed = text.size() + 1;
        if (buf && buflen > 0) copy_out(text, buf, buflen);
        return SN_OK;
    });
}

} // extern "C"
