#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "phaselock/errors.hpp"

namespace phaselock::hyperbolic {

using Complex = std::complex<double>;

/// Point nu + i y in the upper half-plane.
struct HalfPlanePoint {
    double nu = 0.0;
    double y = 1.0;

    HalfPlanePoint(double nu_, double y_) : nu(nu_), y(y_) {
        if (!(y > 0.0)) throw parameter_error("hyperbolic: point must satisfy y > 0");
    }

    /// Receiver normalization additionally requires 0 < y < 1.
    static HalfPlanePoint receiver(double nu_, double y_) {
        if (!(y_ > 0.0 && y_ < 1.0))
            throw parameter_error("hyperbolic: receiver point needs 0 < y < 1");
        return HalfPlanePoint(nu_, y_);
    }

    Complex complex_value() const { return {nu, y}; }
};

/// Integer unimodular map z -> (a z + b) / (c z + d), det = 1.
struct MoebiusMap {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    MoebiusMap() = default;
    MoebiusMap(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);

    /// Map built from two consecutive convergents: (p_i, p_{i-1}; q_i, q_{i-1}).
    static MoebiusMap from_convergents(std::int64_t p_i, std::int64_t p_im1, std::int64_t q_i,
                                       std::int64_t q_im1);

    MoebiusMap operator*(const MoebiusMap& rhs) const;  // composition: apply rhs first
};

Complex moebius_apply(const MoebiusMap& m, Complex z);
HalfPlanePoint moebius_apply(const MoebiusMap& m, const HalfPlanePoint& z);

enum class WaveBranch { principal, reflected };  // y^s vs y^{1-s}

/// Eigenfunction of the hyperbolic Laplacian with eigenvalue s(s-1):
/// y^s (or y^{1-s}), shifted to (Im gamma(z))^s when a map is supplied.
Complex eigenwave(const HalfPlanePoint& z, Complex s, const MoebiusMap* map = nullptr,
                  WaveBranch branch = WaveBranch::principal);

struct EisensteinPartial {
    Complex value;
    bool conditionally_convergent = false;  // Re(s) <= 1: partial sums only
};

/// y^s (1 + sum_{q <= Q} sum_{q' in [0,q), gcd(q,q')=1} |q z + q'|^{-2s}).
EisensteinPartial eisenstein_partial(const HalfPlanePoint& z, Complex s, std::int64_t Q);

/// Gamma function for complex argument (rational Lanczos core plus reflection).
Complex gamma_complex(Complex s);
Complex log_gamma_complex(Complex s);  // valid for Re(s) > 0.5

/// Riemann zeta for complex argument; alternating-series core on the right
/// half-plane, functional equation on the left. s = 1 raises a pole error.
Complex zeta_complex(Complex s);

/// Completed zeta: pi^{-s/2} Gamma(s/2) zeta(s).
Complex xi_complex(Complex s);

/// Scattering coefficient xi(2s-1)/xi(2s).
Complex scattering_coefficient(Complex s);
/// Identical quantity assembled as A(s) Z(s) with Z = zeta(2s-1)/zeta(2s),
/// A = Gamma(1/2) Gamma(s-1/2) / Gamma(s); used as a cross-route check.
Complex scattering_coefficient_az(Complex s);

Complex zeta_quotient(Complex s);  // Z(s) = zeta(2s-1)/zeta(2s)

struct ScatterSample {
    double k = 0.0;
    double kappa = 0.0;        // half the unwrapped phase of Z(1/2 + ik)
    double kappa_prime = 0.0;  // central difference, step 1e-3
    double kappa_exact = 0.0;  // half the unwrapped phase of the full S(1/2 + ik)
};

/// Critical-line scattering phase along an increasing grid of k > 0.
/// Unwrapping is nearest-branch from the smallest k; a true phase step of
/// pi/2 or more between neighbours aborts with a numerical error.
std::vector<ScatterSample> scattering_phase(std::span<const double> k_grid);

struct WavefrontCircle {
    double tangency = 0.0;  // -q_{i-1}/q_i on the real axis
    double radius = 0.0;    // 1/(2 c^2 q_i^2)
    double level = 0.0;     // the constant c; the circle is Im gamma(z) = c^2
    std::int64_t q_i = 0;
    std::int64_t q_im1 = 0;
};

struct degenerate_wavefront_error : parameter_error {
    using parameter_error::parameter_error;
};

/// Constant-height front of the shifted eigenwave: the circle where
/// Im gamma(z) = y / |q_i z + q_{i-1}|^2 equals level^2, tangent to the real
/// axis at -q_{i-1}/q_i with radius 1/(2 level^2 q_i^2). At level = 1 it is
/// the Ford circle of the denominator slid horizontally. q_i = 0 degenerates
/// to a horizontal line and is signalled distinctly.
WavefrontCircle wavefront(const MoebiusMap& m, double level);

}  // namespace phaselock::hyperbolic
