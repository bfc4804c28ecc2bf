#include "starnoma/special_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace starnoma {

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    }
#if defined(__GLIBC__) || defined(__linux__)
    int sign = 0;
    return ::lgamma_r(x, &sign); // reentrant: avoids the signgam global
#else
    return std::lgamma(x);
#endif
}

namespace {

// Series representation of P(k, x), valid (and fast) for x < k + 1.
double lower_gamma_series(double k, double x) {
    constexpr int max_iter = 500;
    constexpr long double eps = 1e-14L;
    long double ap = k;
    long double term = 1.0L / k;
    long double sum = term;
    for (int i = 0; i < max_iter; ++i) {
        ap += 1.0L;
        term *= x / ap;
        sum += term;
        if (std::fabs((double)(term / sum)) < (double)eps) {
            long double lp = k * std::log((long double)x) - x - (long double)log_gamma(k);
            if (lp < -745.0L) return 0.0;
            return (double)(sum * std::exp(lp));
        }
    }
    throw std::runtime_error("reg_lower_incomplete_gamma: series did not converge");
}

// Modified Lentz continued fraction for Q(k, x) = 1 - P(k, x), valid for x >= k + 1.
double upper_gamma_continued_fraction(double k, double x) {
    constexpr int max_iter = 500;
    constexpr long double eps = 1e-14L;
    constexpr long double tiny = 1e-300L;
    long double b = x + 1.0L - k;
    long double c = 1.0L / tiny;
    long double d = 1.0L / b;
    long double h = d;
    for (int i = 1; i <= max_iter; ++i) {
        long double an = -(long double)i * ((long double)i - k);
        b += 2.0L;
        d = an * d + b;
        if (std::fabs((double)d) < (double)tiny) d = tiny;
        c = b + an / c;
        if (std::fabs((double)c) < (double)tiny) c = tiny;
        d = 1.0L / d;
        long double delta = d * c;
        h *= delta;
        if (std::fabs((double)(delta - 1.0L)) < (double)eps) {
            long double lp = k * std::log((long double)x) - x - (long double)log_gamma(k);
            if (lp < -745.0L) return 0.0;
            return (double)(std::exp(lp) * h);
        }
    }
    throw std::runtime_error("reg_lower_incomplete_gamma: continued fraction did not converge");
}

} // namespace

double reg_lower_incomplete_gamma(double k, double x) {
    if (!(k > 0.0)) {
        throw std::domain_error("reg_lower_incomplete_gamma: shape must be positive");
    }
    if (x < 0.0 || !std::isfinite(x)) {
        if (std::isinf(x) && x > 0.0) return 1.0;
        throw std::domain_error("reg_lower_incomplete_gamma: x must be nonnegative");
    }
    if (x == 0.0) return 0.0;
    if (x < k + 1.0) return lower_gamma_series(k, x);
    return 1.0 - upper_gamma_continued_fraction(k, x);
}

NakagamiMoments nakagami_moments(double m, double omega) {
    if (!(m >= 0.5)) {
        throw std::domain_error("nakagami_moments: shape must be >= 0.5");
    }
    if (omega < 0.0) {
        throw std::domain_error("nakagami_moments: spread must be nonnegative");
    }
    if (omega == 0.0) return {0.0, 0.0};
    double mean = std::exp(log_gamma(m + 0.5) - log_gamma(m)) * std::sqrt(omega / m);
    return {mean, omega - mean * mean};
}

} // namespace starnoma
