// Command-line front end for the starnoma shared library.
//
// Subcommands:
//   op-sweep   outage probability over an axis, written as CSV
//   ec-sweep   ergodic capacity over an axis, written as CSV
//   fit        print the fitted magnitude laws and point metrics
//   validate   run the fit self-checks against a fresh batch
//
// The tool is a thin shell over the public C API; all modelling lives in
// the library.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starnoma.h"

namespace {

struct ConfigDeleter {
    void operator()(sn_config* cfg) const { sn_config_destroy(cfg); }
};
using ConfigPtr = std::unique_ptr<sn_config, ConfigDeleter>;

[[noreturn]] void fail(const std::string& what) {
    const char* detail = sn_last_error();
    std::fprintf(stderr, "error: %s\n", what.c_str());
    if (detail != nullptr && detail[0] != '\0') {
        std::fprintf(stderr, "%s\n", detail);
    }
    std::exit(1);
}

void check(sn_status status, const std::string& what) {
    if (status != SN_OK) fail(what);
}

// Options shared by every subcommand: where the configuration comes from
// and which scalar overrides apply on top of it.
struct ConfigOptions {
    std::string config_path;
    std::string scenario;
    std::string phase_design;
    std::vector<std::string> overrides;  // key=value pairs
};

void add_config_options(CLI::App& cmd, ConfigOptions& opt) {
    cmd.add_option("-c,--config", opt.config_path,
                   "Configuration file (key = value lines); defaults to the "
                   "built-in parameter set");
    cmd.add_option("--scenario", opt.scenario,
                   "Override the deployment scenario (a, b or c)");
    cmd.add_option("--phase-design", opt.phase_design,
                   "Override the phase design (coherent or random)");
    cmd.add_option("--set", opt.overrides,
                   "Additional key=value override (repeatable)")
        ->expected(-1);
}

ConfigPtr make_config(const ConfigOptions& opt) {
    sn_config* raw = nullptr;
    if (opt.config_path.empty()) {
        check(sn_config_create_default(&raw), "cannot create configuration");
    } else {
        check(sn_config_load(opt.config_path.c_str(), &raw),
              "cannot load " + opt.config_path);
    }
    ConfigPtr cfg(raw);
    if (!opt.scenario.empty()) {
        check(sn_config_set(cfg.get(), "scenario", opt.scenario.c_str()),
              "bad --scenario value");
    }
    if (!opt.phase_design.empty()) {
        check(sn_config_set(cfg.get(), "phase_design", opt.phase_design.c_str()),
              "bad --phase-design value");
    }
    for (const std::string& kv : opt.overrides) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            fail("--set expects key=value, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        check(sn_config_set(cfg.get(), key.c_str(), value.c_str()),
              "bad --set " + kv);
    }
    check(sn_config_validate(cfg.get()), "configuration is invalid");
    return cfg;
}

// Axis values arrive either as plain numbers or as start:stop:step ranges
// (inclusive stop, within a half-step tolerance), comma-separated or
// repeated.
std::vector<double> expand_values(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    auto parse_number = [](const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("bad number '" + s + "'");
        }
        if (pos != s.size()) throw std::runtime_error("bad number '" + s + "'");
        return v;
    };
    for (const std::string& token : tokens) {
        std::size_t begin = 0;
        while (begin <= token.size()) {
            std::size_t end = token.find(',', begin);
            if (end == std::string::npos) end = token.size();
            const std::string item = token.substr(begin, end - begin);
            begin = end + 1;
            if (item.empty()) continue;
            const std::size_t c1 = item.find(':');
            if (c1 == std::string::npos) {
                out.push_back(parse_number(item));
                continue;
            }
            const std::size_t c2 = item.find(':', c1 + 1);
            if (c2 == std::string::npos) {
                throw std::runtime_error("range needs start:stop:step, got '" +
                                         item + "'");
            }
            const double start = parse_number(item.substr(0, c1));
            const double stop = parse_number(item.substr(c1 + 1, c2 - c1 - 1));
            const double step = parse_number(item.substr(c2 + 1));
            if (!(step > 0.0) || stop < start) {
                throw std::runtime_error("range '" + item +
                                         "' must have step > 0 and stop >= start");
            }
            for (int i = 0;; ++i) {
                const double v = start + step * i;
                if (v > stop + step * 0.5) break;
                out.push_back(std::min(v, stop));
            }
        }
    }
    if (out.empty()) throw std::runtime_error("no axis values given");
    return out;
}

struct SweepOptions {
    ConfigOptions config;
    std::string axis = "eta";
    std::vector<std::string> value_tokens;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string out_path;
};

void add_sweep_options(CLI::App& cmd, SweepOptions& opt,
                       const std::string& default_out) {
    add_config_options(cmd, opt.config);
    cmd.add_option("-a,--axis", opt.axis,
                   "Sweep axis: eta, rho_db or n_total")
        ->capture_default_str();
    cmd.add_option("-v,--values", opt.value_tokens,
                   "Axis values: comma list and/or start:stop:step ranges")
        ->required()
        ->expected(-1);
    cmd.add_option("-t,--trials", opt.trials, "Monte-Carlo trials per point")
        ->capture_default_str();
    cmd.add_option("-s,--seed", opt.seed, "Base seed for the sweep")
        ->capture_default_str();
    opt.out_path = default_out;
    cmd.add_option("-o,--out", opt.out_path, "Output CSV path")
        ->capture_default_str();
}

int run_sweep(const SweepOptions& opt, bool want_op, bool want_ec) {
    std::vector<double> values;
    try {
        values = expand_values(opt.value_tokens);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    ConfigPtr cfg = make_config(opt.config);
    check(sn_sweep_csv(cfg.get(), opt.axis.c_str(), values.data(),
                       values.size(), opt.trials, opt.seed, want_op ? 1 : 0,
                       want_ec ? 1 : 0, opt.out_path.c_str()),
          "sweep failed");
    std::printf("wrote %s (%zu points, %" PRIu64 " trials each)\n",
                opt.out_path.c_str(), values.size(), opt.trials);
    return 0;
}

int run_fit(const ConfigOptions& opt) {
    ConfigPtr cfg = make_config(opt);
    std::int32_t n_cris = 0;
    std::int32_t n_star = 0;
    check(sn_config_elements(cfg.get(), &n_cris, &n_star), "element split");
    std::printf("elements: conventional %d, transmitting-reflecting %d\n",
                n_cris, n_star);

    struct Side {
        const char* name;
        sn_status (*fit)(const sn_config*, double*, double*, int*);
    };
    const Side sides[] = {{"indoor", sn_fit_indoor},
                          {"outdoor", sn_fit_outdoor}};
    for (const Side& side : sides) {
        double shape = 0.0;
        double scale = 0.0;
        int has_fit = 0;
        check(side.fit(cfg.get(), &shape, &scale, &has_fit),
              std::string("fit ") + side.name);
        if (has_fit != 0) {
            std::printf(
                "%s fit: shape %.9g, scale %.9g (mean %.9g, cv %.4f)\n",
                side.name, shape, scale, shape * scale, 1.0 / std::sqrt(shape));
        } else {
            std::printf("%s fit: none (channel is structurally zero)\n",
                        side.name);
        }
    }

    double op_i = 0.0;
    double op_o = 0.0;
    check(sn_op_analytical(cfg.get(), &op_i, &op_o), "outage probability");
    double ec_i = 0.0;
    double ec_o = 0.0;
    check(sn_ec_analytical(cfg.get(), 1, &ec_i, &ec_o), "ergodic capacity");
    std::printf("outage probability: indoor %.9g, outdoor %.9g\n", op_i, op_o);
    std::printf("ergodic capacity:   indoor %.9g, outdoor %.9g "
                "(sum %.9g bit/cu)\n",
                ec_i, ec_o, ec_i + ec_o);
    return 0;
}

int run_validate(const ConfigOptions& opt, std::uint64_t trials,
                 std::uint64_t seed) {
    ConfigPtr cfg = make_config(opt);
    std::size_t needed = 0;
    check(sn_validate_report(cfg.get(), trials, seed, nullptr, nullptr, 0,
                             &needed),
          "validation sizing");
    std::string buf(needed, '\0');
    int all_pass = 0;
    check(sn_validate_report(cfg.get(), trials, seed, &all_pass, buf.data(),
                             buf.size(), &needed),
          "validation");
    std::fputs(buf.c_str(), stdout);
    return all_pass != 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-RIS NOMA link evaluator"};
    app.set_version_flag("--version", std::string(sn_version()));
    app.require_subcommand(1);

    SweepOptions op_opt;
    CLI::App* op_cmd = app.add_subcommand(
        "op-sweep", "Outage probability over an axis (CSV)");
    add_sweep_options(*op_cmd, op_opt, "op_sweep.csv");

    SweepOptions ec_opt;
    CLI::App* ec_cmd = app.add_subcommand(
        "ec-sweep", "Ergodic capacity over an axis (CSV)");
    add_sweep_options(*ec_cmd, ec_opt, "ec_sweep.csv");

    ConfigOptions fit_opt;
    CLI::App* fit_cmd = app.add_subcommand(
        "fit", "Print fitted magnitude laws and point metrics");
    add_config_options(*fit_cmd, fit_opt);

    ConfigOptions val_opt;
    std::uint64_t val_trials = 20000;
    std::uint64_t val_seed = 1;
    CLI::App* val_cmd = app.add_subcommand(
        "validate", "Run the fit self-checks against a fresh batch");
    add_config_options(*val_cmd, val_opt);
    val_cmd->add_option("-t,--trials", val_trials, "Monte-Carlo trials")
        ->capture_default_str();
    val_cmd->add_option("-s,--seed", val_seed, "Batch seed")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (op_cmd->parsed()) return run_sweep(op_opt, true, false);
    if (ec_cmd->parsed()) return run_sweep(ec_opt, false, true);
    if (fit_cmd->parsed()) return run_fit(fit_opt);
    return run_validate(val_opt, val_trials, val_seed);
}
