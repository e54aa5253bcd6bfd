#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "phaselock/confrac.hpp"
#include "phaselock/errors.hpp"

namespace phaselock::dynamics {

// ---------------------------------------------------------------------------
// Continuous phase dynamics
// ---------------------------------------------------------------------------

/// dPhi/dt = detuning - gain * sin(Phi)
struct AdlerParams {
    double gain = 0.0;      // open-loop gain K, rad/s, >= 0
    double detuning = 0.0;  // omega_LF, rad/s
    double phi0 = 0.0;      // initial phase, rad
};

struct Trajectory {
    std::vector<double> t;
    std::vector<double> phi;
    std::vector<double> rate;  // dPhi/dt at the same instants
    double mean_rate = 0.0;         // asymptotic <dPhi/dt>, rad/s
    bool locked = false;            // |detuning| <= gain
    double asymptotic_phase = 0.0;  // steady phase in (-pi, pi], locked case only
};

Trajectory adler_integrate(const AdlerParams& params, double t_end, double tol);

/// Fixed-step classical RK4 run; exists so the order of the scheme can be
/// measured directly against a small-step reference.
Trajectory adler_integrate_fixed_rk4(const AdlerParams& params, double t_end, double step);

/// sqrt(detuning^2 - gain^2); domain error inside the locked zone.
double beat_frequency(double omega_lf, double gain);

/// (1 + gain^2/beat^2)^{1/2}: growth factor of frequency deviations just
/// outside the locked zone.
double allan_magnification(double omega_lf, double gain);

struct HarmonicTerm {
    std::int64_t r = 1;
    std::int64_t s = 1;     // coprime with r
    double gain = 0.0;      // rad/s
    double phase0 = 0.0;    // reference angle, rad
};

/// Phase equation at the resonance target = p/q with the full harmonic
/// forcing sum. lowpass_tau > 0 inserts a first-order low-pass between the
/// forcing sum and the phase integrator; tau = 0 is the direct (identity) loop.
Trajectory harmonic_adler_integrate(double omega0, const confrac::Convergent& target,
                                    std::span<const HarmonicTerm> terms, double omega_lf,
                                    double phi0, double t_end, double tol,
                                    double lowpass_tau = 0.0);

// ---------------------------------------------------------------------------
// Circle map
// ---------------------------------------------------------------------------

/// Phi_{n+1} = Phi_n + 2 pi Omega - c sin Phi_n  (lift)
struct ArnoldParams {
    double bare_ratio = 0.0;  // Omega
    double coupling = 0.0;    // c >= 0
    double phi0 = 0.0;
};

double winding_number(const ArnoldParams& params, std::int64_t n_transient, std::int64_t n_iter);

struct Plateau {
    std::int64_t p = 0;
    std::int64_t q = 1;
    double omega_lo = 0.0;
    double omega_hi = 0.0;
    double width() const { return omega_hi - omega_lo; }
};

struct StaircaseResult {
    std::vector<double> omega;
    std::vector<double> nu;
    std::vector<Plateau> plateaus;
    bool overlap_regime = false;  // c >= 1: tongues may overlap
};

struct StaircaseOptions {
    std::int64_t n_transient = 4096;
    std::int64_t n_iter = 32768;
    double plateau_tol = 1e-5;
    std::int64_t max_denominator = 16;
    double phi0 = 0.0;
};

StaircaseResult staircase_scan(double coupling, std::span<const double> omega_grid,
                               const StaircaseOptions& opt = StaircaseOptions());

std::vector<double> linear_grid(double lo, double hi, double step);

// ---------------------------------------------------------------------------
// Time-series statistics
// ---------------------------------------------------------------------------

struct TimeSeries {
    double dt = 1.0;
    std::vector<double> samples;
};

struct AllanPoint {
    double tau = 0.0;
    double sigma = 0.0;
};

/// Non-overlapping two-sample (Allan) deviation over adjacent tau averages.
std::vector<AllanPoint> allan_deviation(const TimeSeries& series, std::span<const double> taus);

struct SpectralEstimate {
    std::vector<double> frequency;  // Hz, strictly increasing, DC excluded
    std::vector<double> psd;        // one-sided density
    double slope = 0.0;             // log-log fit over [f_lo, f_hi]
    double slope_stderr = 0.0;
};

struct PsdOptions {
    std::size_t segment = 8192;  // power of two; shrunk to fit short series
};

SpectralEstimate psd_estimate(const TimeSeries& series, double f_lo, double f_hi,
                              const PsdOptions& opt = PsdOptions());

/// Unit-variance noise with power spectral density 1/f^alpha, synthesized by
/// frequency-domain shaping of seeded white noise. Deterministic per seed.
TimeSeries synth_power_law_noise(double alpha, std::size_t n, std::uint64_t seed, double dt = 1.0);

TimeSeries synth_white_noise(std::size_t n, std::uint64_t seed, double dt = 1.0);

// ---------------------------------------------------------------------------
// Counted-beat experiment
// ---------------------------------------------------------------------------

struct PllNoiseResult {
    TimeSeries counts;                 // beat counts per gate
    std::vector<AllanPoint> allan;     // of the counted series
    double sigma_input = 0.0;          // Allan deviation of the injected frequency
    double sigma_output = 0.0;         // Allan deviation of the counted beat
    double sigma_ratio = 1.0;
    double predicted_ratio = 1.0;      // allan_magnification at the working point
};

/// White frequency jitter on the detuning, mapped through the beat-frequency
/// law and counted per gate interval.
PllNoiseResult pll_noise_experiment(const AdlerParams& params, double jitter_rms,
                                    std::uint64_t seed, std::size_t n_counts, double gate_s = 1.0);

}  // namespace phaselock::dynamics
