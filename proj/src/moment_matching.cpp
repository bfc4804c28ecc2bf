#include "starnoma/moment_matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "starnoma/special_math.hpp"

namespace starnoma {

namespace {

constexpr double kPi = 3.14159265358979323846;

double relayed_power(const SystemConfig& cfg, const PathGains& b) {
    return b.bs_cris * b.cris_star * static_cast<double>(cfg.cris_elements()) *
           cfg.bs_cris.omega * cfg.cris_star.omega;
}

} // namespace

CompositeMoments composite_moments(const SystemConfig& cfg) {
    const PathGains b = effective_gains(cfg);
    const double n_c = static_cast<double>(cfg.cris_elements());
    const double n_s = static_cast<double>(cfg.star_elements());

    const NakagamiMoments f = nakagami_moments(cfg.bs_cris.m, cfg.bs_cris.omega);
    const NakagamiMoments g = nakagami_moments(cfg.cris_out.m, cfg.cris_out.omega);
    const NakagamiMoments t = nakagami_moments(cfg.bs_star.m, cfg.bs_star.omega);
    const NakagamiMoments ui = nakagami_moments(cfg.star_in.m, cfg.star_in.omega);
    const NakagamiMoments uo = nakagami_moments(cfg.star_out.m, cfg.star_out.omega);

    CompositeMoments out;

    const double direct_pw = b.bs_star * cfg.bs_star.omega;
    const double relay_pw = relayed_power(cfg, b);
    const double incident_pw = direct_pw + relay_pw;
    out.incident_power = incident_pw;

    if (relay_pw > 0.0) {
        // The relayed sum over the reflector is a zero-mean complex Gaussian
        // in the many-element limit, so the composite incident magnitude is
        // modeled as Rayleigh with matching power.
        out.incident.mean = std::sqrt(kPi * incident_pw / 4.0);
        out.incident.variance = (4.0 - kPi) / 4.0 * incident_pw;
    } else if (direct_pw > 0.0) {
        // No relayed component: the incident field is exactly the direct
        // link, whose moments are known in closed form. The Gaussian limit
        // would misplace the mean here, so it is not used.
        out.incident.mean = std::sqrt(b.bs_star) * t.mean;
        out.incident.variance = b.bs_star * t.variance;
    } // else: no incident field at all; moments stay zero.

    out.cris_cascade.mean = std::sqrt(b.bs_cris * b.cris_out) * n_c * f.mean * g.mean;
    out.cris_cascade.variance =
        b.bs_cris * b.cris_out * n_c *
        (cfg.bs_cris.omega * cfg.cris_out.omega -
         f.mean * f.mean * g.mean * g.mean);

    // Per-element products |incident| * |user link| are treated as
    // independent across the surface; their sum then has N-fold moments.
    const double mx = out.incident.mean;
    const double amp_in = cfg.xi * std::sqrt(b.star_in);
    out.star_indoor.mean = amp_in * n_s * mx * ui.mean;
    out.star_indoor.variance =
        cfg.xi * cfg.xi * b.star_in * n_s *
        (incident_pw * cfg.star_in.omega - mx * mx * ui.mean * ui.mean);

    const double amp_out = cfg.xi * std::sqrt(b.star_out);
    out.star_outdoor.mean = amp_out * n_s * mx * uo.mean;
    out.star_outdoor.variance =
        cfg.xi * cfg.xi * b.star_out * n_s *
        (incident_pw * cfg.star_out.omega - mx * mx * uo.mean * uo.mean);

    return out;
}

std::optional<GammaParams> gamma_from_moments(const Moments& m) {
    if (!(m.mean > 0.0) || !(m.variance > 0.0)) return std::nullopt;
    const double shape = m.mean * m.mean / m.variance;
    const double scale = m.variance / m.mean;
    return GammaParams{shape, scale};
}

Moments moments_of(const GammaParams& p) {
    return Moments{p.shape * p.scale, p.shape * p.scale * p.scale};
}

std::optional<GammaParams> fit_h_indoor(const SystemConfig& cfg) {
    return gamma_from_moments(composite_moments(cfg).star_indoor);
}

std::optional<GammaParams> fit_h_outdoor(const SystemConfig& cfg) {
    const CompositeMoments m = composite_moments(cfg);
    const Moments total{m.cris_cascade.mean + m.star_outdoor.mean,
                        m.cris_cascade.variance + m.star_outdoor.variance};
    return gamma_from_moments(total);
}

std::optional<GammaParams> fit_h_indoor_direct(const SystemConfig& cfg) {
    const PathGains b = effective_gains(cfg);
    const double n_s = static_cast<double>(cfg.star_elements());
    const double relay_pw = relayed_power(cfg, b);
    if (!(relay_pw > 0.0) || n_s == 0.0 || !(b.star_in > 0.0)) return std::nullopt;
    const double incident_pw = b.bs_star * cfg.bs_star.omega + relay_pw;

    const double mu = nakagami_moments(cfg.star_in.m, cfg.star_in.omega).mean;
    const double omega = cfg.star_in.omega;
    const double spread = omega - mu * mu * kPi / 4.0;
    if (!(mu > 0.0) || !(spread > 0.0)) return std::nullopt;

    const double shape = n_s * mu * mu * (kPi / 4.0) / spread;
    const double scale = cfg.xi * std::sqrt(b.star_in) * std::sqrt(incident_pw) *
                         spread / (std::sqrt(kPi / 4.0) * mu);
    return GammaParams{shape, scale};
}

std::optional<GammaParams> fit_h_outdoor_direct(const SystemConfig& cfg) {
    const PathGains b = effective_gains(cfg);
    const double n_c = static_cast<double>(cfg.cris_elements());
    const double n_s = static_cast<double>(cfg.star_elements());
    const double relay_pw = relayed_power(cfg, b);
    if (!(relay_pw > 0.0)) return std::nullopt;
    const double incident_pw = b.bs_star * cfg.bs_star.omega + relay_pw;

    const double mu_f = nakagami_moments(cfg.bs_cris.m, cfg.bs_cris.omega).mean;
    const double mu_g = nakagami_moments(cfg.cris_out.m, cfg.cris_out.omega).mean;
    const double mu_u = nakagami_moments(cfg.star_out.m, cfg.star_out.omega).mean;
    const double omega_u = cfg.star_out.omega;

    const double mean = std::sqrt(b.bs_cris * b.cris_out) * n_c * mu_f * mu_g +
                        cfg.xi * std::sqrt(b.star_out) * n_s *
                            std::sqrt(kPi * incident_pw / 4.0) * mu_u;
    const double variance =
        b.bs_cris * b.cris_out * n_c *
            (cfg.bs_cris.omega * cfg.cris_out.omega -
             mu_f * mu_f * mu_g * mu_g) +
        cfg.xi * cfg.xi * b.star_out * n_s * incident_pw *
            (4.0 * omega_u - mu_u * mu_u * kPi) / 4.0;
    if (!(mean > 0.0) || !(variance > 0.0)) return std::nullopt;
    return GammaParams{mean * mean / variance, variance / mean};
}

double mean_square(const GammaParams& p) {
    return p.scale * p.scale * p.shape * (p.shape + 1.0);
}

double mean_square_large_shape(const GammaParams& p) {
    const double mean = p.shape * p.scale;
    return mean * mean;
}

double gamma_log_pdf(const GammaParams& p, double x) {
    if (!(p.shape > 0.0) || !(p.scale > 0.0)) {
        throw std::domain_error("gamma_log_pdf: parameters must be positive");
    }
    if (x == 0.0) {
        // Boundary limits: zero density for shape > 1, the exponential
        // intercept 1/scale at shape == 1, divergent below.
        if (p.shape > 1.0) return -std::numeric_limits<double>::infinity();
        if (p.shape == 1.0) return -std::log(p.scale);
        return std::numeric_limits<double>::infinity();
    }
    if (x < 0.0) return -std::numeric_limits<double>::infinity();
    return (p.shape - 1.0) * std::log(x) - x / p.scale -
           p.shape * std::log(p.scale) - log_gamma(p.shape);
}

double gamma_pdf(const GammaParams& p, double x) {
    const double lp = gamma_log_pdf(p, x);
    if (std::isinf(lp)) {
        return lp < 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::exp(lp);
}

double gamma_cdf(const GammaParams& p, double x) {
    if (!(p.shape > 0.0) || !(p.scale > 0.0)) {
        throw std::domain_error("gamma_cdf: parameters must be positive");
    }
    if (!(x > 0.0)) return 0.0;
    return reg_lower_incomplete_gamma(p.shape, x / p.scale);
}

double ks_distance(std::vector<double> samples, const GammaParams& fit) {
    if (samples.empty()) {
        throw std::invalid_argument("ks_distance: empty sample");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = gamma_cdf(fit, samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        dist = std::max(dist, std::max(cdf - lo, hi - cdf));
    }
    return dist;
}

} // namespace starnoma
