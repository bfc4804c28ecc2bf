#include "starnoma/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace starnoma {

SinrSample sinr_from_magnitudes(const SystemConfig& cfg, double mag_indoor,
                                double mag_outdoor) {
    const double rho = cfg.rho();
    const double pi = rho * mag_indoor * mag_indoor;
    const double po = rho * mag_outdoor * mag_outdoor;
    SinrSample s;
    s.indoor_cross = cfg.lambda_o * pi / (cfg.lambda_i * pi + 1.0);
    s.indoor = cfg.lambda_i * pi;
    s.outdoor = cfg.lambda_o * po / (cfg.lambda_i * po + 1.0);
    return s;
}

double threshold_from_rate(double rate) {
    return std::exp2(rate) - 1.0;
}

OutagePair op_analytical(const SystemConfig& cfg,
                         const std::optional<GammaParams>& fit_indoor,
                         const std::optional<GammaParams>& fit_outdoor) {
    OutagePair out;
    const double margin = cfg.lambda_o - cfg.lambda_i * cfg.gamma_th_o;
    if (!(margin > 0.0)) {
        // The outdoor message is undecodable at any SNR with this split:
        // its SINR is capped below the target, so both users are in outage
        // (the indoor user must decode that message first).
        return out;
    }
    const double rho = cfg.rho();
    const double x_outdoor = std::sqrt(cfg.gamma_th_o / (rho * margin));
    const double x_indoor =
        std::max(x_outdoor, std::sqrt(cfg.gamma_th_i / (cfg.lambda_i * rho)));
    out.indoor = fit_indoor ? gamma_cdf(*fit_indoor, x_indoor) : 1.0;
    if (fit_outdoor) {
        out.outdoor = gamma_cdf(*fit_outdoor, x_outdoor);
    } else {
        // A silent channel fails any positive target and trivially meets a
        // zero one (the outdoor outage comparison is strict).
        out.outdoor = cfg.gamma_th_o > 0.0 ? 1.0 : 0.0;
    }
    return out;
}

OutagePair op_analytical(const SystemConfig& cfg) {
    return op_analytical(cfg, fit_h_indoor(cfg), fit_h_outdoor(cfg));
}

namespace {

double fitted_mean_square(const std::optional<GammaParams>& fit,
                          SquaredMagnitude kind) {
    if (!fit) return 0.0;
    return kind == SquaredMagnitude::exact ? mean_square(*fit)
                                           : mean_square_large_shape(*fit);
}

} // namespace

RatePair ec_analytical(const SystemConfig& cfg,
                       const std::optional<GammaParams>& fit_indoor,
                       const std::optional<GammaParams>& fit_outdoor,
                       SquaredMagnitude kind) {
    const double rho = cfg.rho();
    const double pi = rho * fitted_mean_square(fit_indoor, kind);
    const double po = rho * fitted_mean_square(fit_outdoor, kind);
    RatePair r;
    r.indoor = std::log2(1.0 + cfg.lambda_i * pi);
    r.outdoor = std::log2(1.0 + cfg.lambda_o * po / (cfg.lambda_i * po + 1.0));
    return r;
}

RatePair ec_analytical(const SystemConfig& cfg, SquaredMagnitude kind) {
    return ec_analytical(cfg, fit_h_indoor(cfg), fit_h_outdoor(cfg), kind);
}

EmpiricalMetrics empirical_metrics(const SystemConfig& cfg,
                                   const MagnitudeBatch& batch) {
    const std::size_t n = batch.indoor.size();
    if (n == 0 || batch.outdoor.size() != n) {
        throw std::invalid_argument("empirical_metrics: batch sides must be "
                                    "non-empty and equally sized");
    }
    std::uint64_t outages_indoor = 0;
    std::uint64_t outages_outdoor = 0;
    // Welford accumulation: numerically stable and exactly zero spread for a
    // constant batch.
    double mean_ri = 0.0, m2_ri = 0.0;
    double mean_ro = 0.0, m2_ro = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SinrSample s =
            sinr_from_magnitudes(cfg, batch.indoor[i], batch.outdoor[i]);
        // The indoor user is in outage if either decoding stage misses its
        // target; the outdoor comparison is strict so that a zero target is
        // always met.
        if (s.indoor_cross <= cfg.gamma_th_o || s.indoor <= cfg.gamma_th_i) {
            ++outages_indoor;
        }
        if (s.outdoor < cfg.gamma_th_o) ++outages_outdoor;
        const double count = static_cast<double>(i + 1);
        const double ri = std::log2(1.0 + s.indoor);
        const double di = ri - mean_ri;
        mean_ri += di / count;
        m2_ri += di * (ri - mean_ri);
        const double ro = std::log2(1.0 + s.outdoor);
        const double dout = ro - mean_ro;
        mean_ro += dout / count;
        m2_ro += dout * (ro - mean_ro);
    }
    const double dn = static_cast<double>(n);
    EmpiricalMetrics m;
    m.trials = n;
    m.op_indoor = static_cast<double>(outages_indoor) / dn;
    m.op_outdoor = static_cast<double>(outages_outdoor) / dn;
    m.op_indoor_se = std::sqrt(m.op_indoor * (1.0 - m.op_indoor) / dn);
    m.op_outdoor_se = std::sqrt(m.op_outdoor * (1.0 - m.op_outdoor) / dn);
    m.ec_indoor = mean_ri;
    m.ec_outdoor = mean_ro;
    if (n > 1) {
        m.ec_indoor_se = std::sqrt(std::max(0.0, m2_ri / (dn - 1.0)) / dn);
        m.ec_outdoor_se = std::sqrt(std::max(0.0, m2_ro / (dn - 1.0)) / dn);
    }
    return m;
}

OutagePair op_empirical(const SystemConfig& cfg, const MagnitudeBatch& batch) {
    const EmpiricalMetrics m = empirical_metrics(cfg, batch);
    return OutagePair{m.op_indoor, m.op_outdoor};
}

RatePair ec_empirical(const SystemConfig& cfg, const MagnitudeBatch& batch) {
    const EmpiricalMetrics m = empirical_metrics(cfg, batch);
    return RatePair{m.ec_indoor, m.ec_outdoor};
}

EmpiricalMetrics simulate_metrics(const SystemConfig& cfg, std::uint64_t trials,
                                  std::uint64_t seed) {
    return empirical_metrics(cfg, sample_magnitudes(cfg, trials, seed));
}

} // namespace starnoma
