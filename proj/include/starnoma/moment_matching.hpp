#pragma once

#include <optional>
#include <vector>

#include "starnoma/system_config.hpp"

namespace starnoma {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Shape/scale parametrization; the fitted law of a composite magnitude.
struct GammaParams {
    double shape = 0.0;
    double scale = 0.0;
};

/// First- and second-order statistics of the building blocks of the two
/// composite channels, with large-scale gains and the surface energy split
/// already applied. `incident` describes the field magnitude arriving at one
/// STAR element; `star_indoor` is the full indoor channel magnitude;
/// the outdoor channel magnitude is the sum of `cris_cascade` and
/// `star_outdoor`, treated as independent.
struct CompositeMoments {
    Moments incident;
    Moments cris_cascade;
    Moments star_indoor;
    Moments star_outdoor;
    double incident_power = 0.0; // second moment of the incident magnitude
};

CompositeMoments composite_moments(const SystemConfig& cfg);

/// Moment inversion: mean = k*s, variance = k*s^2. Requires both moments
/// strictly positive; otherwise the distribution is degenerate and no Gamma
/// law exists (nullopt).
std::optional<GammaParams> gamma_from_moments(const Moments& m);
Moments moments_of(const GammaParams& p);

/// Gamma fits of the composite channel magnitudes. A structurally zero
/// channel (no surface elements on the needed side, or all of its incoming
/// power zeroed) has no fit and yields nullopt; metric code substitutes the
/// exact degenerate limits instead.
std::optional<GammaParams> fit_h_indoor(const SystemConfig& cfg);
std::optional<GammaParams> fit_h_outdoor(const SystemConfig& cfg);

/// Algebraically reduced one-line expressions for the same fits, valid on
/// the branch where the incident field is treated as a zero-mean complex
/// Gaussian (relayed power present). Used as an independent cross-check of
/// the moment pipeline; nullopt where the reduction does not apply.
std::optional<GammaParams> fit_h_indoor_direct(const SystemConfig& cfg);
std::optional<GammaParams> fit_h_outdoor_direct(const SystemConfig& cfg);

/// Second moment of a Gamma-distributed magnitude, exact and in the
/// large-shape limit where the mean dominates the spread.
double mean_square(const GammaParams& p);
double mean_square_large_shape(const GammaParams& p);

double gamma_log_pdf(const GammaParams& p, double x);
double gamma_pdf(const GammaParams& p, double x);
double gamma_cdf(const GammaParams& p, double x);

/// Two-sided Kolmogorov–Smirnov distance between a sample and a fitted
/// Gamma law. The input is copied and sorted internally.
double ks_distance(std::vector<double> samples, const GammaParams& fit);

} // namespace starnoma
