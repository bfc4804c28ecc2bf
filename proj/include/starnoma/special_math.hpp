#pragma once

namespace starnoma {

// First two moments of a Nakagami-m amplitude with spread omega = E[r^2].
struct NakagamiMoments {
    double mean = 0.0;
    double variance = 0.0;
};

// ln Gamma(x) for x > 0. Throws std::domain_error outside the domain.
double log_gamma(double x);

// Regularized lower incomplete gamma P(k, x) = gamma(k, x) / Gamma(k),
// k > 0, x >= 0. Series expansion for x < k + 1, Lentz continued fraction
// otherwise; converges to ~1e-14 with an iteration cap of 500.
double reg_lower_incomplete_gamma(double k, double x);

// mean = Gamma(m + 1/2) sqrt(omega) / (Gamma(m) sqrt(m)), variance = omega - mean^2.
// Requires m >= 0.5 and omega >= 0 (omega == 0 models a switched-off link and
// yields zero moments).
NakagamiMoments nakagami_moments(double m, double omega);

} // namespace starnoma
