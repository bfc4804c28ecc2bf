#include "starnoma/channels.hpp"

#include <algorithm>
#include <cmath>

namespace starnoma {

namespace {

// Phase-conjugating reflection coefficient: rotates `reference` onto the
// positive real axis. Degenerate (zero) references fall back to identity.
std::complex<double> conjugate_rotation(const std::complex<double>& reference) {
    const double r = std::abs(reference);
    if (r == 0.0) return {1.0, 0.0};
    return std::conj(reference) / r;
}

} // namespace

void sample_nakagami_vector(Rng& rng, const LinkParams& link, std::size_t count,
                            std::vector<std::complex<double>>& out) {
    out.resize(count);
    for (auto& c : out) c = rng.nakagami_phasor(link.m, link.omega);
}

ChannelSampler::ChannelSampler(const SystemConfig& cfg)
    : cfg_(cfg),
      gains_(effective_gains(cfg)),
      n_cris_(cfg.cris_elements()),
      n_star_(cfg.star_elements()) {
    cris_relay_.resize(n_star_);
    incident_.resize(n_star_);
    d_row_.resize(n_star_);
}

ChannelRealization ChannelSampler::realize(Rng& rng) {
    return realize_impl(rng, nullptr);
}

ChannelRealization ChannelSampler::realize(Rng& rng, RealizationDetail& detail) {
    return realize_impl(rng, &detail);
}

ChannelRealization ChannelSampler::realize_impl(Rng& rng, RealizationDetail* detail) {
    const bool coherent = cfg_.phase_design == PhaseDesign::coherent;
    const double amp_cascade = std::sqrt(gains_.bs_cris * gains_.cris_out);
    const double amp_direct = std::sqrt(gains_.bs_star);
    const double amp_relay = std::sqrt(gains_.bs_cris * gains_.cris_star);
    const double amp_in = cfg_.xi * std::sqrt(gains_.star_in);
    const double amp_out = cfg_.xi * std::sqrt(gains_.star_out);

    sample_nakagami_vector(rng, cfg_.bs_cris, n_cris_, bs_cris_);
    sample_nakagami_vector(rng, cfg_.cris_out, n_cris_, cris_out_);
    sample_nakagami_vector(rng, cfg_.bs_star, n_star_, bs_star_);

    // C-RIS -> STAR rows are consumed as they are drawn; only tests ask for
    // the full matrix.
    if (detail) {
        detail->cris_star.clear();
        detail->cris_star.reserve(n_cris_ * n_star_);
    }
    std::fill(cris_relay_.begin(), cris_relay_.end(), std::complex<double>(0.0, 0.0));
    std::vector<std::complex<double>> pending_rows; // random design only
    if (!coherent) pending_rows.reserve(n_cris_ * n_star_);
    for (std::size_t n = 0; n < n_cris_; ++n) {
        sample_nakagami_vector(rng, cfg_.cris_star, n_star_, d_row_);
        if (detail) {
            detail->cris_star.insert(detail->cris_star.end(), d_row_.begin(), d_row_.end());
        }
        if (coherent) {
            // The reflector phase for element n is fixed by its own cascade
            // pair, so the row can be folded in immediately.
            const std::complex<double> rot =
                conjugate_rotation(bs_cris_[n] * cris_out_[n]);
            const std::complex<double> coeff = bs_cris_[n] * rot;
            const double cr = coeff.real();
            const double ci = coeff.imag();
            for (std::size_t k = 0; k < n_star_; ++k) {
                const double dr = d_row_[k].real();
                const double di = d_row_[k].imag();
                cris_relay_[k] += std::complex<double>(cr * dr - ci * di,
                                                       cr * di + ci * dr);
            }
        } else {
            pending_rows.insert(pending_rows.end(), d_row_.begin(), d_row_.end());
        }
    }

    sample_nakagami_vector(rng, cfg_.star_in, n_star_, star_in_);
    sample_nakagami_vector(rng, cfg_.star_out, n_star_, star_out_);

    // Under the random design all reflection phases are drawn after the
    // fading coefficients, in surface order, so the fading stream is
    // identical to the coherent design up to this point.
    std::complex<double> cascade{0.0, 0.0};
    std::vector<std::complex<double>> star_rot_in;
    std::vector<std::complex<double>> star_rot_out;
    if (coherent) {
        double acc = 0.0;
        for (std::size_t n = 0; n < n_cris_; ++n) {
            acc += std::abs(bs_cris_[n] * cris_out_[n]);
        }
        cascade = acc;
    } else {
        for (std::size_t n = 0; n < n_cris_; ++n) {
            const std::complex<double> rot = std::polar(1.0, rng.phase());
            cascade += bs_cris_[n] * rot * cris_out_[n];
            const std::complex<double> coeff = bs_cris_[n] * rot;
            for (std::size_t k = 0; k < n_star_; ++k) {
                cris_relay_[k] += coeff * pending_rows[n * n_star_ + k];
            }
        }
        star_rot_in.resize(n_star_);
        star_rot_out.resize(n_star_);
        for (auto& s : star_rot_in) s = std::polar(1.0, rng.phase());
        for (auto& s : star_rot_out) s = std::polar(1.0, rng.phase());
    }

    for (std::size_t k = 0; k < n_star_; ++k) {
        incident_[k] = amp_direct * bs_star_[k] + amp_relay * cris_relay_[k];
    }

    ChannelRealization out;
    const bool align_composite = cfg_.star_alignment == StarAlignment::composite;
    std::complex<double> sum_in{0.0, 0.0};
    std::complex<double> sum_out{0.0, 0.0};
    if (coherent && align_composite) {
        double acc_in = 0.0;
        double acc_out = 0.0;
        for (std::size_t k = 0; k < n_star_; ++k) {
            acc_in += std::abs(incident_[k] * star_in_[k]);
            acc_out += std::abs(incident_[k] * star_out_[k]);
        }
        sum_in = acc_in;
        sum_out = acc_out;
    } else if (coherent) {
        // Surface phases track only the relayed component; the direct
        // component then adds with its residual phase.
        for (std::size_t k = 0; k < n_star_; ++k) {
            const std::complex<double> rot_in =
                conjugate_rotation(cris_relay_[k] * star_in_[k]);
            const std::complex<double> rot_out =
                conjugate_rotation(cris_relay_[k] * star_out_[k]);
            sum_in += incident_[k] * rot_in * star_in_[k];
            sum_out += incident_[k] * rot_out * star_out_[k];
        }
    } else {
        for (std::size_t k = 0; k < n_star_; ++k) {
            sum_in += incident_[k] * star_rot_in[k] * star_in_[k];
            sum_out += incident_[k] * star_rot_out[k] * star_out_[k];
        }
    }
    out.h_indoor = amp_in * sum_in;
    out.h_outdoor = amp_cascade * cascade + amp_out * sum_out;

    if (detail) {
        detail->bs_cris = bs_cris_;
        detail->cris_out = cris_out_;
        detail->bs_star = bs_star_;
        detail->star_in = star_in_;
        detail->star_out = star_out_;
        detail->cris_relay = cris_relay_;
        detail->incident = incident_;
        detail->cris_cascade = cascade;
    }
    return out;
}

MagnitudeBatch sample_magnitudes(const SystemConfig& cfg, std::size_t trials,
                                 std::uint64_t seed) {
    ChannelSampler sampler(cfg);
    MagnitudeBatch batch;
    batch.indoor.resize(trials);
    batch.outdoor.resize(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(seed + i);
        const ChannelRealization r = sampler.realize(rng);
        batch.indoor[i] = std::abs(r.h_indoor);
        batch.outdoor[i] = std::abs(r.h_outdoor);
    }
    return batch;
}

} // namespace starnoma
