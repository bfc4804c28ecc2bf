#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracle_helpers.hpp"
#include "starnoma/channels.hpp"
#include "starnoma/moment_matching.hpp"
#include "starnoma/rng.hpp"
#include "starnoma/special_math.hpp"
#include "starnoma/system_config.hpp"

using namespace starnoma;

namespace {

// Configuration with the element counts pinned exactly.
SystemConfig split_config(int n_cris, int n_star) {
    SystemConfig cfg = default_config();
    cfg.n_total = n_cris + n_star;
    cfg.split_factor =
        cfg.n_total == 0 ? 0.0
                         : static_cast<double>(n_cris) / static_cast<double>(cfg.n_total);
    if (cfg.cris_elements() != n_cris) {
        throw std::logic_error("split_config rounding mismatch");
    }
    return cfg;
}

} // namespace

TEST_CASE("incident moments follow the zero-mean Gaussian sum model") {
    const SystemConfig cfg = default_config(); // relayed power present
    const PathGains g = effective_gains(cfg);
    const CompositeMoments cm = composite_moments(cfg);

    const double n_cris = cfg.cris_elements();
    const double power = g.bs_star * 1.0 + g.bs_cris * g.cris_star * n_cris;
    CHECK(cm.incident_power == doctest::Approx(power).epsilon(1e-12));
    CHECK(cm.incident.mean ==
          doctest::Approx(std::sqrt(3.14159265358979324 * power / 4.0)).epsilon(1e-12));
    // Second-moment identity: mean^2 + variance reproduces the total power.
    CHECK(cm.incident.mean * cm.incident.mean + cm.incident.variance ==
          doctest::Approx(cm.incident_power).epsilon(1e-12));
}

TEST_CASE("incident moments are exact when only the direct illumination remains") {
    SystemConfig cfg = default_config();
    cfg.scenario = Scenario::c; // inter-surface link off: no relayed component
    const PathGains g = effective_gains(cfg);
    REQUIRE(g.cris_star == 0.0);
    const CompositeMoments cm = composite_moments(cfg);
    const NakagamiMoments t = nakagami_moments(cfg.bs_star.m, 1.0);
    CHECK(cm.incident.mean ==
          doctest::Approx(std::sqrt(g.bs_star) * t.mean).epsilon(1e-12));
    CHECK(cm.incident.mean * cm.incident.mean + cm.incident.variance ==
          doctest::Approx(cm.incident_power).epsilon(1e-12));
    CHECK(cm.incident_power == doctest::Approx(g.bs_star).epsilon(1e-12));
}

TEST_CASE("cascade moments scale linearly with the reflector size") {
    const SystemConfig small = split_config(10, 100);
    const SystemConfig big = split_config(20, 100);
    const CompositeMoments a = composite_moments(small);
    const CompositeMoments b = composite_moments(big);
    CHECK(b.cris_cascade.mean == doctest::Approx(2.0 * a.cris_cascade.mean).epsilon(1e-12));
    CHECK(b.cris_cascade.variance ==
          doctest::Approx(2.0 * a.cris_cascade.variance).epsilon(1e-12));
    // Per-element factors: mean of |f||g| for independent Nakagami amplitudes.
    const PathGains g = effective_gains(small);
    const double mu_fg = oracle::kNakMean8 * oracle::kNakMean1p8;
    CHECK(a.cris_cascade.mean ==
          doctest::Approx(std::sqrt(g.bs_cris * g.cris_out) * 10.0 * mu_fg).epsilon(1e-10));
}

TEST_CASE("moment inversion round-trips and rejects degenerate inputs") {
    for (double mean : {0.03, 1.0, 7.5}) {
        for (double var : {1e-6, 0.2, 4.0}) {
            const auto p = gamma_from_moments({mean, var});
            REQUIRE(p.has_value());
            CHECK(p->shape * p->scale == doctest::Approx(mean).epsilon(1e-12));
            CHECK(p->shape * p->scale * p->scale == doctest::Approx(var).epsilon(1e-12));
            const Moments back = moments_of(*p);
            CHECK(back.mean == doctest::Approx(mean).epsilon(1e-12));
            CHECK(back.variance == doctest::Approx(var).epsilon(1e-12));
        }
    }
    CHECK_FALSE(gamma_from_moments({0.0, 1.0}).has_value());
    CHECK_FALSE(gamma_from_moments({-1.0, 1.0}).has_value());
    CHECK_FALSE(gamma_from_moments({1.0, 0.0}).has_value());
    CHECK_FALSE(gamma_from_moments({1.0, -0.5}).has_value());
}

TEST_CASE("indoor fit equals its reduced closed form") {
    // The reduction assumes the zero-mean Gaussian incident model, so it
    // applies exactly whenever relayed power is present.
    for (Scenario sc : {Scenario::a, Scenario::b}) {
        for (double alpha_t : {2.8, 3.1, 3.4}) {
            SystemConfig cfg = default_config();
            cfg.scenario = sc;
            cfg.bs_star.alpha = alpha_t;
            const auto fit = fit_h_indoor(cfg);
            const auto direct = fit_h_indoor_direct(cfg);
            REQUIRE(fit.has_value());
            REQUIRE(direct.has_value());
            CHECK(fit->shape == doctest::Approx(direct->shape).epsilon(1e-10));
            CHECK(fit->scale == doctest::Approx(direct->scale).epsilon(1e-10));
        }
    }
}

TEST_CASE("outdoor fit equals its reduced closed form") {
    for (Scenario sc : {Scenario::a, Scenario::b}) {
        for (double alpha_t : {2.8, 3.1, 3.4}) {
            SystemConfig cfg = default_config();
            cfg.scenario = sc;
            cfg.bs_star.alpha = alpha_t;
            const auto fit = fit_h_outdoor(cfg);
            const auto direct = fit_h_outdoor_direct(cfg);
            REQUIRE(fit.has_value());
            REQUIRE(direct.has_value());
            CHECK(fit->shape == doctest::Approx(direct->shape).epsilon(1e-10));
            CHECK(fit->scale == doctest::Approx(direct->scale).epsilon(1e-10));
        }
    }
}

TEST_CASE("reduced forms decline configurations outside their branch") {
    SystemConfig cfg = default_config();
    cfg.scenario = Scenario::c; // no relayed power: incident field is Nakagami
    CHECK_FALSE(fit_h_indoor_direct(cfg).has_value());
    CHECK_FALSE(fit_h_outdoor_direct(cfg).has_value());
    CHECK(fit_h_indoor(cfg).has_value());
    CHECK(fit_h_outdoor(cfg).has_value());
}

TEST_CASE("indoor fit matches the hand-propagated moments") {
    const SystemConfig cfg = default_config();
    const PathGains g = effective_gains(cfg);
    const double ns = cfg.star_elements();
    const double power = g.bs_star + g.bs_cris * g.cris_star * cfg.cris_elements();
    const double mu_x = std::sqrt(3.14159265358979324 * power / 4.0);
    const double mu_u = oracle::kNakMean15;
    const double mean = cfg.xi * std::sqrt(g.star_in) * ns * mu_x * mu_u;
    const double var =
        cfg.xi * cfg.xi * g.star_in * ns * (power * 1.0 - mu_x * mu_x * mu_u * mu_u);
    const auto fit = fit_h_indoor(cfg);
    REQUIRE(fit.has_value());
    CHECK(fit->shape * fit->scale == doctest::Approx(mean).epsilon(1e-10));
    CHECK(fit->shape * fit->scale * fit->scale == doctest::Approx(var).epsilon(1e-10));
}

TEST_CASE("outdoor fit without a reflector reduces to the surface-only term") {
    const SystemConfig cfg = split_config(0, 130);
    const CompositeMoments cm = composite_moments(cfg);
    CHECK(cm.cris_cascade.mean == 0.0);
    CHECK(cm.cris_cascade.variance == 0.0);
    const auto fit = fit_h_outdoor(cfg);
    const auto star_only = gamma_from_moments(cm.star_outdoor);
    REQUIRE(fit.has_value());
    REQUIRE(star_only.has_value());
    CHECK(fit->shape == doctest::Approx(star_only->shape).epsilon(1e-12));
    CHECK(fit->scale == doctest::Approx(star_only->scale).epsilon(1e-12));
}

TEST_CASE("fits disappear only for structurally zero channels") {
    const SystemConfig all_cris = split_config(200, 0);
    CHECK_FALSE(fit_h_indoor(all_cris).has_value());
    const auto outdoor = fit_h_outdoor(all_cris);
    REQUIRE(outdoor.has_value());
    // Cascade-only channel: matches the cascade block exactly.
    const CompositeMoments cm = composite_moments(all_cris);
    CHECK(outdoor->shape * outdoor->scale ==
          doctest::Approx(cm.cris_cascade.mean).epsilon(1e-12));

    SystemConfig dark = default_config();
    dark.star_in.omega = 0.0;
    CHECK_FALSE(fit_h_indoor(dark).has_value());
    CHECK(fit_h_outdoor(dark).has_value());
}

TEST_CASE("a tighter surface link tightens the indoor fit") {
    SystemConfig cfg = default_config();
    cfg.star_in.m = 15.0;
    const auto loose = fit_h_indoor(cfg);
    cfg.star_in.m = 500.0;
    const auto tight = fit_h_indoor(cfg);
    REQUIRE(loose.has_value());
    REQUIRE(tight.has_value());
    const double cv_loose = 1.0 / std::sqrt(loose->shape);
    const double cv_tight = 1.0 / std::sqrt(tight->shape);
    CHECK(cv_tight < cv_loose);
}

TEST_CASE("fitted outdoor mean is monotone in both element counts") {
    // Growing either surface adds nonnegative summands (the zero-relay branch
    // at n_cris == 0 uses the exact incident law and sits slightly above the
    // Gaussian-model value, so monotonicity is asserted from n_cris >= 1).
    for (double alpha_t : {2.8, 3.4}) {
        double prev = 0.0;
        for (int nc : {1, 2, 3, 5, 10, 30, 70}) {
            SystemConfig cfg = split_config(nc, 130);
            cfg.bs_star.alpha = alpha_t;
            const auto fit = fit_h_outdoor(cfg);
            REQUIRE(fit.has_value());
            const double mean = fit->shape * fit->scale;
            CHECK(mean >= prev);
            prev = mean;
        }
        prev = 0.0;
        for (int ns : {1, 5, 20, 60, 130}) {
            SystemConfig cfg = split_config(70, ns);
            cfg.bs_star.alpha = alpha_t;
            const auto fit = fit_h_outdoor(cfg);
            REQUIRE(fit.has_value());
            const double mean = fit->shape * fit->scale;
            CHECK(mean >= prev);
            prev = mean;
        }
    }
}

TEST_CASE("gamma second moments: exact versus large-shape limit") {
    const GammaParams p{12.0, 0.3};
    CHECK(mean_square(p) == doctest::Approx(p.scale * p.scale * p.shape * (p.shape + 1.0))
                                .epsilon(1e-14));
    CHECK(mean_square_large_shape(p) ==
          doctest::Approx(p.shape * p.scale * p.shape * p.scale).epsilon(1e-14));
    // Relative excess of the exact form is 1/shape.
    CHECK(mean_square(p) / mean_square_large_shape(p) - 1.0 ==
          doctest::Approx(1.0 / p.shape).epsilon(1e-12));
}

TEST_CASE("gamma density boundary values and shape") {
    CHECK(gamma_pdf({1.0, 1.0}, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_pdf({1.0, 2.0}, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(gamma_pdf({3.0, 1.0}, 0.0) == 0.0);
    CHECK(std::isinf(gamma_pdf({0.5, 1.0}, 0.0)));
    // Mode at (shape - 1) * scale.
    const GammaParams p{4.0, 0.7};
    const double mode = (p.shape - 1.0) * p.scale;
    CHECK(gamma_pdf(p, mode) >= gamma_pdf(p, mode * 0.9));
    CHECK(gamma_pdf(p, mode) >= gamma_pdf(p, mode * 1.1));
    CHECK_THROWS_AS((void)gamma_pdf({0.0, 1.0}, 1.0), std::domain_error);
}

TEST_CASE("gamma density integrates to one and to the distribution function") {
    const GammaParams p{3.0, 0.5};
    const double total =
        oracle::integrate([&](double x) { return gamma_pdf(p, x); }, 0.0, 30.0, 1e-10);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    const double piece =
        oracle::integrate([&](double x) { return gamma_pdf(p, x); }, 0.4, 2.2, 1e-12);
    CHECK(piece == doctest::Approx(gamma_cdf(p, 2.2) - gamma_cdf(p, 0.4)).epsilon(1e-9));
}

TEST_CASE("gamma distribution function reference points") {
    CHECK(gamma_cdf({2.0, 1.0}, 0.0) == 0.0);
    CHECK(gamma_cdf({1.0, 2.0}, 2.0) == doctest::Approx(oracle::kRegGamma_1_1).epsilon(1e-13));
    // Large-shape median is near (shape - 1/3) * scale.
    CHECK(gamma_cdf({10.0, 1.0}, 10.0 - 1.0 / 3.0) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::fabs(gamma_cdf({10.0, 1.0}, 10.0 - 1.0 / 3.0) - 0.5) < 0.01);
}

TEST_CASE("distribution distance is near zero for self-samples and large for mismatches") {
    const GammaParams p{5.0, 0.4};
    Rng rng(2024);
    std::vector<double> samples(20000);
    for (double& s : samples) s = rng.gamma(p.shape, p.scale);
    const double self = ks_distance(samples, p);
    CHECK(self < 0.017); // ~1.5x the 1% critical value at this sample size
    const double wrong = ks_distance(samples, {5.0, 0.48});
    CHECK(wrong > 0.05);
    CHECK_THROWS_AS((void)ks_distance({}, p), std::invalid_argument);
}

TEST_CASE("fitted laws describe the sampled magnitudes") {
    const SystemConfig cfg = default_config();
    const auto fit_i = fit_h_indoor(cfg);
    const auto fit_o = fit_h_outdoor(cfg);
    REQUIRE(fit_i.has_value());
    REQUIRE(fit_o.has_value());
    // Model KS of the approximation plus the 99% finite-sample fluctuation;
    // the strict 0.03 bound is enforced at 1e5 samples by the acceptance run.
    const std::size_t n = 20000;
    const double limit = 0.03 + 1.63 / std::sqrt((double)n);
    const MagnitudeBatch batch = sample_magnitudes(cfg, n, 31);
    CHECK(ks_distance(batch.indoor, *fit_i) <= limit);
    CHECK(ks_distance(batch.outdoor, *fit_o) <= limit);
}
