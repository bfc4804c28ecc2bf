#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace starnoma {

// Nakagami fading plus log-distance path loss for one link.
struct LinkParams {
    double m = 1.0;        // Nakagami shape, >= 0.5
    double omega = 1.0;    // Nakagami spread E[r^2]; 0 switches the link off
    double distance = 1.0; // meters, > 0
    double alpha = 2.0;    // path-loss exponent, >= 0
};

// Which propagation terms are active. A keeps everything, B keeps only the
// double-reflection path (direct surface links off), C keeps only the
// single-reflection paths (inter-surface link off).
enum class Scenario { a, b, c };

enum class PhaseDesign { coherent, random };

// Coherent alignment target of the transmitting/reflecting surface: the full
// per-element composite (direct + relayed), or only the relayed component.
enum class StarAlignment { composite, double_reflection };

struct SystemConfig {
    int n_total = 200;          // total surface elements across both RIS
    double split_factor = 0.35; // fraction of elements assigned to the near-BS RIS
    double xi = 0.5;            // STAR energy-splitting coefficient per mode
    double lambda_i = 0.15;     // NOMA power coefficient, indoor (strong) user
    double lambda_o = 0.75;     // NOMA power coefficient, outdoor (weak) user
    double rho_db = 35.0;       // transmit SNR in dB
    double gamma_th_i = 0.5;    // SINR decoding threshold, indoor message (linear)
    double gamma_th_o = 0.5;    // SINR decoding threshold, outdoor message (linear)
    double d0 = 1.0;            // path-loss reference distance, meters

    Scenario scenario = Scenario::a;
    PhaseDesign phase_design = PhaseDesign::coherent;
    StarAlignment star_alignment = StarAlignment::composite;

    // Links, keyed in config files by the conventional vector names:
    // f: BS -> C-RIS, g: C-RIS -> outdoor, t: BS -> STAR, d: C-RIS -> STAR,
    // u_i / u_o: STAR -> indoor / outdoor user.
    LinkParams bs_cris;     // f
    LinkParams cris_out;    // g
    LinkParams bs_star;     // t
    LinkParams cris_star;   // d
    LinkParams star_in;     // u_i
    LinkParams star_out;    // u_o

    // Element split: round-half-up keeps eta sweeps well defined on integers.
    int cris_elements() const { return (int)std::floor(split_factor * n_total + 0.5); }
    int star_elements() const { return n_total - cris_elements(); }
    double rho() const { return std::pow(10.0, rho_db / 10.0); }
};

// (d0 / d)^alpha. Throws std::domain_error for nonpositive distances.
double path_loss(const LinkParams& link, double d0);

// Large-scale gains with the scenario filter applied (B zeroes bs_star and
// cris_out, C zeroes cris_star). Fading draws are unaffected by the filter,
// so realizations across scenarios stay draw-for-draw comparable.
struct PathGains {
    double bs_cris = 0, cris_out = 0, bs_star = 0, cris_star = 0, star_in = 0, star_out = 0;
};
PathGains effective_gains(const SystemConfig& cfg);

// Returns the list of violated constraints (empty when valid); each entry
// names the constraint, e.g. "lambda_i < lambda_o".
std::vector<std::string> validate_config(const SystemConfig& cfg);

// Throws std::invalid_argument listing every violation.
void require_valid(const SystemConfig& cfg);

// Default configuration: the bundled measurement-campaign preset built into
// the library (same values as presets/table1.cfg).
SystemConfig default_config();

std::string to_string(Scenario s);
std::string to_string(PhaseDesign p);
std::string to_string(StarAlignment a);
bool scenario_from_string(const std::string& s, Scenario& out);
bool phase_design_from_string(const std::string& s, PhaseDesign& out);
bool star_alignment_from_string(const std::string& s, StarAlignment& out);

} // namespace starnoma
