#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace starnoma {

/// Deterministic random source for channel realizations.
///
/// All distributions are implemented on top of a single 53-bit uniform so
/// that a given seed yields the same stream on every platform; the standard
/// library distribution adaptors are unspecified across implementations and
/// would break cross-run reproducibility of stored CSV output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via the Marsaglia polar method (keeps the spare).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double r = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * r;
        has_spare_ = true;
        return u * r;
    }

    /// Gamma(shape, scale) via Marsaglia–Tsang squeeze; shape < 1 handled by
    /// the boost identity G(a) = G(a + 1) * U^(1/a). A zero scale propagates
    /// to an exact zero draw (degenerate channel), consuming the same number
    /// of uniforms as a nonzero scale so streams stay aligned.
    double gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

    /// Nakagami-m envelope with E[r^2] = omega; omega = 0 gives exactly 0.
    double nakagami(double m, double omega) {
        return std::sqrt(gamma(m, omega / m));
    }

    /// Uniform point on the unit circle by disk rejection (no trig calls).
    std::complex<double> unit_phasor() {
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double inv = 1.0 / std::sqrt(s);
        return {u * inv, v * inv};
    }

    /// Nakagami-m magnitude with an independent uniform phase.
    std::complex<double> nakagami_phasor(double m, double omega) {
        return nakagami(m, omega) * unit_phasor();
    }

    /// Phase uniform on [0, 2*pi), for random reflection designs.
    double phase() { return 2.0 * pi_ * uniform(); }

private:
    static constexpr double pi_ = 3.14159265358979323846;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// splitmix64 finalizer; used to derive independent per-point seeds from a
/// base seed plus axis coordinates so sweep rows do not share streams.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b) {
    return mix_seed(a ^ (mix_seed(b) + 0x9e3779b97f4a7c15ULL));
}

} // namespace starnoma
