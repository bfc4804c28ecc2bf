#include "starnoma/system_config.hpp"

#include <sstream>
#include <stdexcept>

namespace starnoma {

double path_loss(const LinkParams& link, double d0) {
    if (!(link.distance > 0.0) || !(d0 > 0.0)) {
        throw std::domain_error("path_loss: distances must be positive");
    }
    return std::pow(d0 / link.distance, link.alpha);
}

PathGains effective_gains(const SystemConfig& cfg) {
    PathGains b;
    b.bs_cris = path_loss(cfg.bs_cris, cfg.d0);
    b.cris_out = path_loss(cfg.cris_out, cfg.d0);
    b.bs_star = path_loss(cfg.bs_star, cfg.d0);
    b.cris_star = path_loss(cfg.cris_star, cfg.d0);
    b.star_in = path_loss(cfg.star_in, cfg.d0);
    b.star_out = path_loss(cfg.star_out, cfg.d0);
    switch (cfg.scenario) {
        case Scenario::a:
            break;
        case Scenario::b: // double-reflection only
            b.bs_star = 0.0;
            b.cris_out = 0.0;
            break;
        case Scenario::c: // single-reflection only
            b.cris_star = 0.0;
            break;
    }
    return b;
}

namespace {

void check_link(std::vector<std::string>& out, const char* name, const LinkParams& l) {
    if (!(l.m >= 0.5)) out.push_back(std::string(name) + ".m >= 0.5");
    if (!(l.omega >= 0.0)) out.push_back(std::string(name) + ".omega >= 0");
    if (!(l.distance > 0.0)) out.push_back(std::string(name) + ".distance > 0");
    if (!(l.alpha >= 0.0)) out.push_back(std::string(name) + ".alpha >= 0");
}

} // namespace

std::vector<std::string> validate_config(const SystemConfig& cfg) {
    std::vector<std::string> v;
    if (cfg.n_total < 1) v.push_back("n_total >= 1");
    if (!(cfg.split_factor >= 0.0 && cfg.split_factor <= 1.0)) v.push_back("split_factor in [0, 1]");
    if (!(cfg.xi > 0.0 && cfg.xi < 1.0)) v.push_back("xi in (0, 1)");
    if (!(cfg.lambda_i > 0.0 && cfg.lambda_o < 1.0)) v.push_back("lambda in (0, 1)");
    if (!(cfg.lambda_i < cfg.lambda_o)) v.push_back("lambda_i < lambda_o");
    if (!(cfg.lambda_i + cfg.lambda_o <= 1.0 + 1e-12)) v.push_back("lambda_i + lambda_o <= 1");
    if (!(cfg.gamma_th_i >= 0.0)) v.push_back("gamma_th_i >= 0");
    if (!(cfg.gamma_th_o >= 0.0)) v.push_back("gamma_th_o >= 0");
    if (!std::isfinite(cfg.rho_db)) v.push_back("rho_db finite");
    if (!(cfg.d0 > 0.0)) v.push_back("d0 > 0");
    check_link(v, "link.bs_cris", cfg.bs_cris);
    check_link(v, "link.cris_out", cfg.cris_out);
    check_link(v, "link.bs_star", cfg.bs_star);
    check_link(v, "link.cris_star", cfg.cris_star);
    check_link(v, "link.star_in", cfg.star_in);
    check_link(v, "link.star_out", cfg.star_out);
    return v;
}

void require_valid(const SystemConfig& cfg) {
    auto v = validate_config(cfg);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid configuration, violated:";
    for (const auto& s : v) os << " [" << s << "]";
    throw std::invalid_argument(os.str());
}

SystemConfig default_config() {
    SystemConfig c;
    c.bs_cris = {8.0, 1.0, 25.0, 2.2};
    c.cris_out = {1.8, 1.0, 35.0, 2.8};
    c.bs_star = {1.5, 1.0, 35.0, 3.4};
    c.cris_star = {8.0, 1.0, 15.0, 2.2};
    c.star_in = {15.0, 1.0, 5.0, 2.0};
    c.star_out = {7.5, 1.0, 20.0, 2.0};
    return c;
}

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::a: return "a";
        case Scenario::b: return "b";
        case Scenario::c: return "c";
    }
    return "?";
}

std::string to_string(PhaseDesign p) {
    return p == PhaseDesign::coherent ? "coherent" : "random";
}

std::string to_string(StarAlignment a) {
    return a == StarAlignment::composite ? "composite" : "double_reflection";
}

bool scenario_from_string(const std::string& s, Scenario& out) {
    if (s == "A" || s == "a") { out = Scenario::a; return true; }
    if (s == "B" || s == "b") { out = Scenario::b; return true; }
    if (s == "C" || s == "c") { out = Scenario::c; return true; }
    return false;
}

bool phase_design_from_string(const std::string& s, PhaseDesign& out) {
    if (s == "coherent") { out = PhaseDesign::coherent; return true; }
    if (s == "random") { out = PhaseDesign::random; return true; }
    return false;
}

bool star_alignment_from_string(const std::string& s, StarAlignment& out) {
    if (s == "composite") { out = StarAlignment::composite; return true; }
    if (s == "double_reflection") { out = StarAlignment::double_reflection; return true; }
    return false;
}

} // namespace starnoma
