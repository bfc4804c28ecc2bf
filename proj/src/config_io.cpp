#include "starnoma/config_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace starnoma {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
    const std::string buf(text);
    if (buf.empty()) return false;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || errno == ERANGE) return false;
    out = v;
    return true;
}

bool parse_count(std::string_view text, int& out) {
    const std::string buf(text);
    if (buf.empty()) return false;
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno == ERANGE) return false;
    if (v < 0 || v > 1000000) return false;
    out = static_cast<int>(v);
    return true;
}

LinkParams* link_by_role(SystemConfig& cfg, std::string_view role) {
    if (role == "bs_cris") return &cfg.bs_cris;
    if (role == "cris_out") return &cfg.cris_out;
    if (role == "bs_star") return &cfg.bs_star;
    if (role == "cris_star") return &cfg.cris_star;
    if (role == "star_in") return &cfg.star_in;
    if (role == "star_out") return &cfg.star_out;
    return nullptr;
}

double* link_field(LinkParams& link, std::string_view field) {
    if (field == "m") return &link.m;
    if (field == "omega") return &link.omega;
    if (field == "distance") return &link.distance;
    if (field == "alpha") return &link.alpha;
    return nullptr;
}

// Applies one assignment; returns an error message, empty on success.
std::string apply(SystemConfig& cfg, std::string_view key, std::string_view value) {
    if (key.rfind("link.", 0) == 0) {
        const std::string_view rest = key.substr(5);
        const auto dot = rest.find('.');
        if (dot == std::string_view::npos) {
            return "link key must look like link.<role>.<field>";
        }
        LinkParams* link = link_by_role(cfg, rest.substr(0, dot));
        if (!link) return "unknown link role '" + std::string(rest.substr(0, dot)) + "'";
        double* field = link_field(*link, rest.substr(dot + 1));
        if (!field) return "unknown link field '" + std::string(rest.substr(dot + 1)) + "'";
        if (!parse_double(value, *field)) return "expected a number";
        return {};
    }
    if (key == "scenario") {
        if (!scenario_from_string(std::string(value), cfg.scenario)) {
            return "expected one of A, B, C";
        }
        return {};
    }
    if (key == "phase_design") {
        if (!phase_design_from_string(std::string(value), cfg.phase_design)) {
            return "expected 'coherent' or 'random'";
        }
        return {};
    }
    if (key == "star_alignment") {
        if (!star_alignment_from_string(std::string(value), cfg.star_alignment)) {
            return "expected 'composite' or 'double_reflection'";
        }
        return {};
    }
    if (key == "n_total") {
        if (!parse_count(value, cfg.n_total)) return "expected a nonnegative integer";
        return {};
    }
    double* target = nullptr;
    if (key == "split_factor") target = &cfg.split_factor;
    else if (key == "xi") target = &cfg.xi;
    else if (key == "lambda_i") target = &cfg.lambda_i;
    else if (key == "lambda_o") target = &cfg.lambda_o;
    else if (key == "rho_db") target = &cfg.rho_db;
    else if (key == "gamma_th_i") target = &cfg.gamma_th_i;
    else if (key == "gamma_th_o") target = &cfg.gamma_th_o;
    else if (key == "d0") target = &cfg.d0;
    if (!target) return "unknown key '" + std::string(key) + "'";
    if (!parse_double(value, *target)) return "expected a number";
    return {};
}

} // namespace

ConfigParseResult parse_config_text(std::string_view text,
                                    const SystemConfig& defaults) {
    ConfigParseResult result;
    SystemConfig cfg = defaults;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            result.errors.push_back({line_no, "expected 'key = value'"});
            continue;
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            result.errors.push_back({line_no, "empty key"});
            continue;
        }
        if (std::string err = apply(cfg, key, value); !err.empty()) {
            result.errors.push_back({line_no, err});
        }
    }
    if (result.errors.empty()) result.config = cfg;
    return result;
}

ConfigParseResult load_config_file(const std::string& path,
                                   const SystemConfig& defaults) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ConfigParseResult r;
        r.errors.push_back({0, "cannot open '" + path + "'"});
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), defaults);
}

namespace {

void emit_double(std::ostringstream& os, const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << key << " = " << buf << '\n';
}

void emit_link(std::ostringstream& os, const std::string& role, const LinkParams& l) {
    emit_double(os, ("link." + role + ".m").c_str(), l.m);
    emit_double(os, ("link." + role + ".omega").c_str(), l.omega);
    emit_double(os, ("link." + role + ".distance").c_str(), l.distance);
    emit_double(os, ("link." + role + ".alpha").c_str(), l.alpha);
}

} // namespace

std::string config_to_text(const SystemConfig& cfg) {
    std::ostringstream os;
    os << "n_total = " << cfg.n_total << '\n';
    emit_double(os, "split_factor", cfg.split_factor);
    emit_double(os, "xi", cfg.xi);
    emit_double(os, "lambda_i", cfg.lambda_i);
    emit_double(os, "lambda_o", cfg.lambda_o);
    emit_double(os, "rho_db", cfg.rho_db);
    emit_double(os, "gamma_th_i", cfg.gamma_th_i);
    emit_double(os, "gamma_th_o", cfg.gamma_th_o);
    emit_double(os, "d0", cfg.d0);
    os << "scenario = " << to_string(cfg.scenario) << '\n';
    os << "phase_design = " << to_string(cfg.phase_design) << '\n';
    os << "star_alignment = " << to_string(cfg.star_alignment) << '\n';
    emit_link(os, "bs_cris", cfg.bs_cris);
    emit_link(os, "cris_out", cfg.cris_out);
    emit_link(os, "bs_star", cfg.bs_star);
    emit_link(os, "cris_star", cfg.cris_star);
    emit_link(os, "star_in", cfg.star_in);
    emit_link(os, "star_out", cfg.star_out);
    return os.str();
}

} // namespace starnoma
