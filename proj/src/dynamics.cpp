#include "phaselock/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "phaselock/fft.hpp"

namespace phaselock::dynamics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Rhs = std::function<void(double, const double*, double*)>;

struct StepRecord {
    double t, h, y;
};

// Dormand-Prince 5(4) with FSAL and standard step control.
void integrate_rk45(const Rhs& rhs, int dim, double* y, double t0, double t_end, double tol,
                    std::vector<double>& ts, std::vector<double>& ys,
                    std::vector<double>& rates) {
    if (!(tol > 0.0)) throw parameter_error("dynamics: tolerance must be positive");
    if (!(t_end > t0)) throw parameter_error("dynamics: t_end must exceed t0");
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double rtol = tol;
    const double atol = tol * 1e-3 + 1e-14;
    double t = t0;
    double h = (t_end - t0) * 1e-3;
    double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], ytmp[2], ynew[2];
    rhs(t, y, k1);
    ts.push_back(t);
    ys.push_back(y[0]);
    rates.push_back(k1[0]);
    StepRecord trace[3] = {{t0, h, y[0]}, {t0, h, y[0]}, {t0, h, y[0]}};

    const double h_min = (t_end - t0) * 1e-14;
    while (t < t_end) {
        h = std::min(h, t_end - t);
        for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + h / 5, ytmp, k2);
        for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + 3 * h / 10, ytmp, k3);
        for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + 4 * h / 5, ytmp, k4);
        for (int i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + 8 * h / 9, ytmp, k5);
        for (int i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (int i = 0; i < dim; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                   e7 * k7[i]);
            const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / dim);

        bool finite = true;
        for (int i = 0; i < dim; ++i) finite = finite && std::isfinite(ynew[i]);
        if (!finite) {
            std::ostringstream os;
            os << "dynamics: non-finite state at t=" << t << "; step trace:";
            for (const auto& r : trace) os << " (t=" << r.t << " h=" << r.h << " phi=" << r.y << ")";
            throw numerical_error(os.str());
        }

        if (err <= 1.0) {
            t += h;
            for (int i = 0; i < dim; ++i) {
                y[i] = ynew[i];
                k1[i] = k7[i];
            }
            ts.push_back(t);
            ys.push_back(y[0]);
            rates.push_back(k1[0]);
            trace[0] = trace[1];
            trace[1] = trace[2];
            trace[2] = {t, h, y[0]};
        }
        const double fac = std::clamp(0.9 * std::pow(err > 0 ? err : 1e-10, -0.2), 0.2, 5.0);
        h *= fac;
        if (h < h_min) throw numerical_error("dynamics: step size underflow");
    }
}

// Crossing time of phi(t) = level inside [t0, t1] from a cubic Hermite model
// of the step; Newton from the secant guess.
double hermite_crossing(double t0, double t1, double p0, double p1, double d0, double d1,
                        double level) {
    const double h = t1 - t0;
    double u = (level - p0) / (p1 - p0);
    for (int it = 0; it < 4; ++it) {
        const double u2 = u * u, u3 = u2 * u;
        const double val = (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * h * d0 +
                           (-2 * u3 + 3 * u2) * p1 + (u3 - u2) * h * d1 - level;
        const double der = (6 * u2 - 6 * u) * p0 + (3 * u2 - 4 * u + 1) * h * d0 +
                           (-6 * u2 + 6 * u) * p1 + (3 * u2 - 2 * u) * h * d1;
        if (der == 0.0) break;
        u -= val / der;
        u = std::clamp(u, 0.0, 1.0);
    }
    return t0 + u * h;
}

// Asymptotic phase advance per unit time, measured by counting full turns
// between the first and last 2*pi crossings after t_start.
double mean_rate_from_trajectory(const std::vector<double>& t, const std::vector<double>& phi,
                                 const std::vector<double>& rate, double t_start) {
    std::size_t i0 = 0;
    while (i0 < t.size() && t[i0] < t_start) ++i0;
    if (i0 + 2 >= t.size()) i0 = t.size() / 2;
    const double ref = phi[i0];
    double first_t = 0.0, last_t = 0.0;
    long first_k = 0, last_k = 0;
    bool have_first = false;
    long k_prev = 0;
    for (std::size_t i = i0 + 1; i < t.size(); ++i) {
        const long k = static_cast<long>(std::floor((phi[i] - ref) / kTwoPi));
        if (k != k_prev) {
            const long k_cross = std::max(k, k_prev);  // handles both directions
            const double level = ref + kTwoPi * static_cast<double>(k_cross);
            const double tc = hermite_crossing(t[i - 1], t[i], phi[i - 1], phi[i], rate[i - 1],
                                               rate[i], level);
            if (!have_first) {
                first_t = tc;
                first_k = k_cross;
                have_first = true;
            }
            last_t = tc;
            last_k = k_cross;
            k_prev = k;
        }
    }
    if (have_first && last_k != first_k)
        return kTwoPi * static_cast<double>(last_k - first_k) / (last_t - first_t);
    // no full turn: secant over the tail
    const std::size_t mid = i0 + (t.size() - i0) / 2;
    return (phi.back() - phi[mid]) / (t.back() - t[mid]);
}

double principal_angle(double phi) {
    double a = std::fmod(phi, kTwoPi);
    if (a <= -std::numbers::pi) a += kTwoPi;
    if (a > std::numbers::pi) a -= kTwoPi;
    return a;
}

}  // namespace

Trajectory adler_integrate(const AdlerParams& params, double t_end, double tol) {
    if (params.gain < 0.0) throw parameter_error("dynamics: gain must be >= 0");
    Trajectory out;
    out.locked = std::abs(params.detuning) <= params.gain;
    double y[2] = {params.phi0, 0.0};
    const Rhs rhs = [&](double, const double* s, double* d) {
        d[0] = params.detuning - params.gain * std::sin(s[0]);
    };
    integrate_rk45(rhs, 1, y, 0.0, t_end, tol, out.t, out.phi, out.rate);
    out.mean_rate = mean_rate_from_trajectory(out.t, out.phi, out.rate, t_end / 3.0);
    if (out.locked) out.asymptotic_phase = principal_angle(out.phi.back());
    return out;
}

Trajectory adler_integrate_fixed_rk4(const AdlerParams& params, double t_end, double step) {
    if (!(step > 0.0)) throw parameter_error("dynamics: step must be positive");
    Trajectory out;
    out.locked = std::abs(params.detuning) <= params.gain;
    const auto f = [&](double phi) { return params.detuning - params.gain * std::sin(phi); };
    double t = 0.0, phi = params.phi0;
    out.t.push_back(t);
    out.phi.push_back(phi);
    out.rate.push_back(f(phi));
    const auto n = static_cast<std::size_t>(std::ceil(t_end / step));
    for (std::size_t i = 0; i < n; ++i) {
        const double h = std::min(step, t_end - t);
        const double k1 = f(phi);
        const double k2 = f(phi + 0.5 * h * k1);
        const double k3 = f(phi + 0.5 * h * k2);
        const double k4 = f(phi + h * k3);
        phi += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        t += h;
        out.t.push_back(t);
        out.phi.push_back(phi);
        out.rate.push_back(f(phi));
    }
    out.mean_rate = mean_rate_from_trajectory(out.t, out.phi, out.rate, t_end / 3.0);
    if (out.locked) out.asymptotic_phase = principal_angle(phi);
    return out;
}

double beat_frequency(double omega_lf, double gain) {
    if (gain < 0.0) throw parameter_error("dynamics: gain must be >= 0");
    if (std::abs(omega_lf) < gain)
        throw parameter_error("dynamics: |detuning| < gain is the locked regime; no beat exists");
    return std::sqrt(omega_lf * omega_lf - gain * gain);
}

double allan_magnification(double omega_lf, double gain) {
    if (gain == 0.0) return 1.0;
    const double beat = beat_frequency(omega_lf, gain);
    if (beat == 0.0) throw parameter_error("dynamics: magnification diverges on the zone boundary");
    return std::sqrt(1.0 + gain * gain / (beat * beat));
}

Trajectory harmonic_adler_integrate(double omega0, const confrac::Convergent& target,
                                    std::span<const HarmonicTerm> terms, double omega_lf,
                                    double phi0, double t_end, double tol, double lowpass_tau) {
    if (terms.empty()) throw parameter_error("dynamics: harmonic term list is empty");
    if (target.q < 1) throw parameter_error("dynamics: target denominator must be >= 1");
    for (const auto& h : terms) {
        if (h.r < 1 || h.s < 1 || std::gcd(h.r, h.s) != 1)
            throw parameter_error("dynamics: harmonic (r, s) must be positive and coprime");
    }
    const double q = static_cast<double>(target.q);
    const double p = static_cast<double>(target.p);

    const auto drive = [&](double t, double phi) {
        double sum = 0.0;
        for (const auto& h : terms) {
            const double rs = static_cast<double>(h.r) * q - p * static_cast<double>(h.s);
            sum += h.gain * std::sin(static_cast<double>(h.s) / q * phi - omega0 * t / q * rs +
                                     h.phase0);
        }
        return sum;
    };

    Trajectory out;
    if (lowpass_tau > 0.0) {
        double y[2] = {phi0, 0.0};
        const Rhs rhs = [&](double t, const double* s, double* d) {
            d[0] = omega_lf - q * s[1];
            d[1] = (drive(t, s[0]) - s[1]) / lowpass_tau;
        };
        integrate_rk45(rhs, 2, y, 0.0, t_end, tol, out.t, out.phi, out.rate);
    } else {
        double y[2] = {phi0, 0.0};
        const Rhs rhs = [&](double t, const double* s, double* d) {
            d[0] = omega_lf - q * drive(t, s[0]);
        };
        integrate_rk45(rhs, 1, y, 0.0, t_end, tol, out.t, out.phi, out.rate);
    }
    out.mean_rate = mean_rate_from_trajectory(out.t, out.phi, out.rate, t_end / 3.0);
    return out;
}

double winding_number(const ArnoldParams& params, std::int64_t n_transient, std::int64_t n_iter) {
    if (params.coupling < 0.0) throw parameter_error("dynamics: coupling must be >= 0");
    if (n_iter < 1000) throw parameter_error("dynamics: winding number needs n_iter >= 1000");
    if (n_transient < 0) throw parameter_error("dynamics: negative transient");
    const double step = kTwoPi * params.bare_ratio;
    const double c = params.coupling;
    double phi = params.phi0;
    for (std::int64_t i = 0; i < n_transient; ++i) phi += step - c * std::sin(phi);
    const double phi_ref = phi;
    for (std::int64_t i = 0; i < n_iter; ++i) phi += step - c * std::sin(phi);
    return (phi - phi_ref) / (kTwoPi * static_cast<double>(n_iter));
}

std::vector<double> linear_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) throw parameter_error("dynamics: bad grid");
    std::vector<double> g;
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5));
    g.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g.push_back(lo + static_cast<double>(i) * step);
    return g;
}

StaircaseResult staircase_scan(double coupling, std::span<const double> omega_grid,
                               const StaircaseOptions& opt) {
    if (omega_grid.empty()) throw parameter_error("dynamics: empty omega grid");
    StaircaseResult res;
    res.overlap_regime = coupling >= 1.0;
    res.omega.assign(omega_grid.begin(), omega_grid.end());
    res.nu.resize(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        ArnoldParams p{omega_grid[i], coupling, opt.phi0};
        res.nu[i] = winding_number(p, opt.n_transient, opt.n_iter);
    }

    // label each point with the smallest-denominator rational within tolerance
    std::vector<Plateau> label(omega_grid.size());
    std::vector<bool> has(omega_grid.size(), false);
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        for (std::int64_t q = 1; q <= opt.max_denominator; ++q) {
            const double pq = res.nu[i] * static_cast<double>(q);
            const std::int64_t p = std::llround(pq);
            if (std::abs(res.nu[i] - static_cast<double>(p) / static_cast<double>(q)) <
                opt.plateau_tol) {
                if (std::gcd(p < 0 ? -p : p, q) == 1) {
                    label[i] = Plateau{p, q, 0, 0};
                    has[i] = true;
                }
                break;
            }
        }
    }
    // group runs; a plateau needs at least two consecutive grid points
    std::size_t i = 0;
    while (i < omega_grid.size()) {
        if (!has[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < omega_grid.size() && has[j + 1] && label[j + 1].p == label[i].p &&
               label[j + 1].q == label[i].q)
            ++j;
        if (j > i)
            res.plateaus.push_back(Plateau{label[i].p, label[i].q, omega_grid[i], omega_grid[j]});
        i = j + 1;
    }
    return res;
}

std::vector<AllanPoint> allan_deviation(const TimeSeries& series, std::span<const double> taus) {
    if (!(series.dt > 0.0)) throw parameter_error("dynamics: dt must be positive");
    const std::size_t n = series.samples.size();
    std::vector<AllanPoint> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        const double m_real = tau / series.dt;
        const auto m = static_cast<std::size_t>(std::llround(m_real));
        if (m == 0 || std::abs(m_real - static_cast<double>(m)) > 1e-9 * m_real)
            throw parameter_error("dynamics: tau must be a positive multiple of dt");
        const std::size_t windows = n / m;
        if (windows < 4)
            throw parameter_error("dynamics: series too short for tau (needs >= 4 windows)");
        std::vector<double> avg(windows);
        for (std::size_t k = 0; k < windows; ++k) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += series.samples[k * m + j];
            avg[k] = s / static_cast<double>(m);
        }
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < windows; ++k) {
            const double d = avg[k + 1] - avg[k];
            acc += d * d;
        }
        const double var = acc / (2.0 * static_cast<double>(windows - 1));
        out.push_back({tau, std::sqrt(var)});
    }
    return out;
}

SpectralEstimate psd_estimate(const TimeSeries& series, double f_lo, double f_hi,
                              const PsdOptions& opt) {
    const std::size_t n = series.samples.size();
    if (n < 1024) throw parameter_error("dynamics: psd needs at least 1024 samples");
    if (!(f_lo > 0.0) || !(f_hi > f_lo)) throw parameter_error("dynamics: empty fit band");
    std::size_t seg = opt.segment;
    if (!fft::is_power_of_two(seg)) throw parameter_error("dynamics: segment must be a power of two");
    while (seg > n) seg >>= 1;

    const double fs = 1.0 / series.dt;
    std::vector<double> window(seg);
    double wss = 0.0;
    for (std::size_t i = 0; i < seg; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(i) / static_cast<double>(seg)));
        wss += window[i] * window[i];
    }

    const std::size_t hop = seg / 2;
    const std::size_t nseg = (n - seg) / hop + 1;
    std::vector<double> acc(seg / 2, 0.0);
    std::vector<std::complex<double>> buf(seg);
    for (std::size_t s = 0; s < nseg; ++s) {
        const double* x = series.samples.data() + s * hop;
        double mean = 0.0;
        for (std::size_t i = 0; i < seg; ++i) mean += x[i];
        mean /= static_cast<double>(seg);
        for (std::size_t i = 0; i < seg; ++i) buf[i] = {(x[i] - mean) * window[i], 0.0};
        fft::transform(buf, false);
        for (std::size_t k = 1; k <= seg / 2; ++k) acc[k - 1] += std::norm(buf[k]);
    }

    SpectralEstimate est;
    est.frequency.resize(seg / 2);
    est.psd.resize(seg / 2);
    const double scale = 2.0 / (fs * wss * static_cast<double>(nseg));
    for (std::size_t k = 1; k <= seg / 2; ++k) {
        est.frequency[k - 1] = static_cast<double>(k) * fs / static_cast<double>(seg);
        est.psd[k - 1] = acc[k - 1] * scale;
    }

    // least-squares log-log fit over the requested band
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t k = 0; k < est.frequency.size(); ++k) {
        const double f = est.frequency[k];
        if (f < f_lo || f > f_hi || est.psd[k] <= 0.0) continue;
        const double lx = std::log(f), ly = std::log(est.psd[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    if (m < 3) throw parameter_error("dynamics: fit band contains fewer than 3 frequencies");
    const double md = static_cast<double>(m);
    const double det = md * sxx - sx * sx;
    est.slope = (md * sxy - sx * sy) / det;
    const double intercept = (sy - est.slope * sx) / md;
    double ss_res = 0.0;
    for (std::size_t k = 0; k < est.frequency.size(); ++k) {
        const double f = est.frequency[k];
        if (f < f_lo || f > f_hi || est.psd[k] <= 0.0) continue;
        const double r = std::log(est.psd[k]) - (intercept + est.slope * std::log(f));
        ss_res += r * r;
    }
    if (m > 2) est.slope_stderr = std::sqrt(ss_res / (md - 2.0) * md / det);
    return est;
}

namespace {

class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}
    double operator()() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        have_ = true;
        return r * std::cos(kTwoPi * u2);
    }

private:
    double uniform() {
        return static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    }
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_ = false;
};

}  // namespace

TimeSeries synth_white_noise(std::size_t n, std::uint64_t seed, double dt) {
    if (n == 0) throw parameter_error("dynamics: empty series requested");
    GaussianSource g(seed);
    TimeSeries ts;
    ts.dt = dt;
    ts.samples.resize(n);
    for (auto& x : ts.samples) x = g();
    return ts;
}

TimeSeries synth_power_law_noise(double alpha, std::size_t n, std::uint64_t seed, double dt) {
    if (n < 2) throw parameter_error("dynamics: power-law series needs n >= 2");
    const std::size_t n2 = fft::next_power_of_two(n);
    GaussianSource g(seed);
    std::vector<std::complex<double>> buf(n2);
    for (auto& z : buf) z = {g(), 0.0};
    fft::transform(buf, false);
    buf[0] = 0.0;
    for (std::size_t k = 1; k < n2; ++k) {
        const std::size_t kk = std::min(k, n2 - k);
        const double f = static_cast<double>(kk) / static_cast<double>(n2);
        buf[k] *= std::pow(f, -alpha / 2.0);
    }
    fft::transform(buf, true);
    TimeSeries ts;
    ts.dt = dt;
    ts.samples.resize(n);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += buf[i].real();
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ts.samples[i] = buf[i].real() - mean;
        var += ts.samples[i] * ts.samples[i];
    }
    var /= static_cast<double>(n);
    const double inv = var > 0.0 ? 1.0 / std::sqrt(var) : 1.0;
    for (auto& x : ts.samples) x *= inv;
    return ts;
}

PllNoiseResult pll_noise_experiment(const AdlerParams& params, double jitter_rms,
                                    std::uint64_t seed, std::size_t n_counts, double gate_s) {
    if (jitter_rms < 0.0) throw parameter_error("dynamics: jitter must be >= 0");
    if (!(gate_s > 0.0)) throw parameter_error("dynamics: gate must be positive");
    if (n_counts < 8) throw parameter_error("dynamics: need at least 8 counts");
    if (std::abs(params.detuning) <= params.gain)
        throw parameter_error("dynamics: |detuning| <= gain is the locked regime; counts carry no beat");

    GaussianSource g(seed);
    TimeSeries input, output;
    input.dt = output.dt = gate_s;
    input.samples.resize(n_counts);
    output.samples.resize(n_counts);
    for (std::size_t i = 0; i < n_counts; ++i) {
        const double w = params.detuning + jitter_rms * g();
        input.samples[i] = w / kTwoPi * gate_s;
        const double beat =
            std::abs(w) <= params.gain ? 0.0 : std::sqrt(w * w - params.gain * params.gain);
        output.samples[i] = beat / kTwoPi * gate_s;
    }

    PllNoiseResult res;
    res.counts = output;
    std::vector<double> taus;
    for (double m = 1; m <= 16 && n_counts / static_cast<std::size_t>(m) >= 4; m *= 2)
        taus.push_back(m * gate_s);
    res.allan = allan_deviation(output, taus);
    res.sigma_output = res.allan.front().sigma;
    res.sigma_input = allan_deviation(input, std::span<const double>(&taus[0], 1)).front().sigma;
    res.sigma_ratio =
        res.sigma_input > 0.0 ? res.sigma_output / res.sigma_input : 1.0;
    res.predicted_ratio = allan_magnification(params.detuning, params.gain);
    return res;
}

}  // namespace phaselock::dynamics
