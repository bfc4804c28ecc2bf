#pragma once

#include <cstdint>
#include <optional>

#include "starnoma/channels.hpp"
#include "starnoma/moment_matching.hpp"
#include "starnoma/system_config.hpp"

namespace starnoma {

/// Post-processing SINRs of one realization. The indoor user first decodes
/// the outdoor message (`indoor_cross`) and cancels it before decoding its
/// own; the outdoor user decodes its message treating the indoor one as
/// noise.
struct SinrSample {
    double indoor_cross = 0.0;
    double indoor = 0.0;
    double outdoor = 0.0;
};

SinrSample sinr_from_magnitudes(const SystemConfig& cfg, double mag_indoor,
                                double mag_outdoor);

/// Target SINR for a rate requirement in bit/s/Hz.
double threshold_from_rate(double rate);

struct OutagePair {
    double indoor = 1.0;
    double outdoor = 1.0;
};

struct RatePair {
    double indoor = 0.0;
    double outdoor = 0.0;
};

/// Which second moment of the fitted magnitude enters the rate formula:
/// the exact one, or the squared mean (valid when the shape parameter is
/// large and the law concentrates).
enum class SquaredMagnitude { exact, large_shape };

/// Closed-form outage probabilities from the fitted magnitude laws. A
/// missing fit means the channel is structurally zero and the degenerate
/// limit applies. When the power split cannot support the outdoor target at
/// any SNR, both users are in permanent outage.
OutagePair op_analytical(const SystemConfig& cfg,
                         const std::optional<GammaParams>& fit_indoor,
                         const std::optional<GammaParams>& fit_outdoor);
OutagePair op_analytical(const SystemConfig& cfg);

/// Mean-power rate approximation from the fitted magnitude laws; zero for a
/// structurally zero channel.
RatePair ec_analytical(const SystemConfig& cfg,
                       const std::optional<GammaParams>& fit_indoor,
                       const std::optional<GammaParams>& fit_outdoor,
                       SquaredMagnitude kind = SquaredMagnitude::exact);
RatePair ec_analytical(const SystemConfig& cfg,
                       SquaredMagnitude kind = SquaredMagnitude::exact);

/// Monte-Carlo estimates with standard errors, computed in one pass over a
/// batch of magnitudes.
struct EmpiricalMetrics {
    double op_indoor = 0.0;
    double op_outdoor = 0.0;
    double op_indoor_se = 0.0;
    double op_outdoor_se = 0.0;
    double ec_indoor = 0.0;
    double ec_outdoor = 0.0;
    double ec_indoor_se = 0.0;
    double ec_outdoor_se = 0.0;
    std::uint64_t trials = 0;
};

EmpiricalMetrics empirical_metrics(const SystemConfig& cfg,
                                   const MagnitudeBatch& batch);
OutagePair op_empirical(const SystemConfig& cfg, const MagnitudeBatch& batch);
RatePair ec_empirical(const SystemConfig& cfg, const MagnitudeBatch& batch);

/// Draws `trials` realizations (engine seeded `seed + i` for trial i) and
/// reduces them.
EmpiricalMetrics simulate_metrics(const SystemConfig& cfg, std::uint64_t trials,
                                  std::uint64_t seed);

} // namespace starnoma
