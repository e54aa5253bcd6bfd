#include "phaselock/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace phaselock::hyperbolic {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t checked_det(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det > INT64_MAX || det < INT64_MIN) throw numerical_error("hyperbolic: map entries overflow");
    return static_cast<std::int64_t>(det);
}

}  // namespace

MoebiusMap::MoebiusMap(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (checked_det(a, b, c, d) != 1)
        throw parameter_error("hyperbolic: map must be unimodular (ad - bc = 1)");
}

MoebiusMap MoebiusMap::from_convergents(std::int64_t p_i, std::int64_t p_im1, std::int64_t q_i,
                                        std::int64_t q_im1) {
    const std::int64_t det = checked_det(p_i, p_im1, q_i, q_im1);
    if (det == 1) return MoebiusMap(p_i, p_im1, q_i, q_im1);
    if (det == -1) return MoebiusMap(-p_i, p_im1, -q_i, q_im1);  // flip one column's sign
    throw parameter_error("hyperbolic: convergent pair is not unimodular");
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& rhs) const {
    const auto mul = [](std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
        const __int128 r = static_cast<__int128>(x) * y + static_cast<__int128>(u) * v;
        if (r > INT64_MAX || r < INT64_MIN)
            throw numerical_error("hyperbolic: map composition overflow");
        return static_cast<std::int64_t>(r);
    };
    return MoebiusMap(mul(a, rhs.a, b, rhs.c), mul(a, rhs.b, b, rhs.d), mul(c, rhs.a, d, rhs.c),
                      mul(c, rhs.b, d, rhs.d));
}

Complex moebius_apply(const MoebiusMap& m, Complex z) {
    const Complex den = static_cast<double>(m.c) * z + static_cast<double>(m.d);
    if (std::abs(den) == 0.0) throw singularity_error("hyperbolic: map applied at its pole");
    return (static_cast<double>(m.a) * z + static_cast<double>(m.b)) / den;
}

HalfPlanePoint moebius_apply(const MoebiusMap& m, const HalfPlanePoint& z) {
    const Complex w = moebius_apply(m, z.complex_value());
    return HalfPlanePoint(w.real(), w.imag());
}

Complex eigenwave(const HalfPlanePoint& z, Complex s, const MoebiusMap* map, WaveBranch branch) {
    const Complex expo = branch == WaveBranch::principal ? s : (Complex(1.0, 0.0) - s);
    if (map == nullptr) return std::exp(expo * std::log(z.y));
    // Im gamma(z) = y / |c z + d|^2
    const Complex den = static_cast<double>(map->c) * z.complex_value() + static_cast<double>(map->d);
    const double im = z.y / std::norm(den);
    return std::exp(expo * std::log(im));
}

EisensteinPartial eisenstein_partial(const HalfPlanePoint& z, Complex s, std::int64_t Q) {
    if (Q < 1) throw parameter_error("hyperbolic: Eisenstein truncation Q must be >= 1");
    EisensteinPartial out;
    out.conditionally_convergent = s.real() <= 1.0;
    Complex sum = 1.0;
    const Complex zc = z.complex_value();
    for (std::int64_t q = 1; q <= Q; ++q) {
        for (std::int64_t r = 0; r < q; ++r) {
            if (std::gcd(q, r) != 1) continue;
            const Complex den = static_cast<double>(q) * zc + static_cast<double>(r);
            // |den|^{-2s} with a real log keeps the branch unambiguous
            sum += std::exp(-s * std::log(std::norm(den)));
        }
    }
    out.value = std::exp(s * std::log(z.y)) * sum;
    return out;
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace {

// Lanczos rational approximation, g = 607/128, 15 coefficients.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

Complex lanczos_log_gamma(Complex z) {
    // valid for Re(z) > 0; use reflection elsewhere
    Complex acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (z + static_cast<double>(k - 1));
    const Complex t = z + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(acc);
}

bool is_nonpositive_integer(Complex s) {
    if (s.imag() != 0.0) return false;
    const double r = s.real();
    return r <= 0.0 && r == std::floor(r);
}

}  // namespace

Complex log_gamma_complex(Complex s) {
    if (s.real() <= 0.5) throw parameter_error("hyperbolic: log_gamma needs Re(s) > 0.5");
    return lanczos_log_gamma(s);
}

Complex gamma_complex(Complex s) {
    if (is_nonpositive_integer(s))
        throw singularity_error("hyperbolic: Gamma pole at s = " + std::to_string(s.real()));
    if (s.real() >= 0.5) return std::exp(lanczos_log_gamma(s));
    // Gamma(s) Gamma(1-s) = pi / sin(pi s)
    const Complex sinpis = std::sin(kPi * s);
    if (std::abs(sinpis) == 0.0) throw singularity_error("hyperbolic: Gamma reflection at a pole");
    return kPi / (sinpis * std::exp(lanczos_log_gamma(Complex(1.0, 0.0) - s)));
}

// ---------------------------------------------------------------------------
// Zeta
// ---------------------------------------------------------------------------

namespace {

// B_{2j}/(2j)! for the Euler-Maclaurin tail
constexpr double kBernoulliOverFact[15] = {
    1.0,
    8.3333333333333333333e-02,
    -1.3888888888888888889e-03,
    3.3068783068783068783e-05,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523340e-19,
    3.5347070396294674716e-21,
    -8.9535174270375468504e-23,
};

// Euler-Maclaurin evaluation; reliable on the whole strip Re(s) > 0 for
// moderate |Im s|, and the fallback where the alternating series loses digits.
Complex zeta_euler_maclaurin(Complex s) {
    const double t = std::abs(s.imag());
    const int N = static_cast<int>(25.0 + 1.3 * t);
    Complex sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double logN = std::log(static_cast<double>(N));
    const Complex NmS = std::exp(-s * logN);
    sum += NmS * static_cast<double>(N) / (s - 1.0) + 0.5 * NmS;
    Complex term = s * NmS / static_cast<double>(N);
    Complex poch = s;
    for (int j = 1; j <= 14; ++j) {
        sum += kBernoulliOverFact[j] * term;
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        term = poch * NmS * std::pow(static_cast<double>(N), -2.0 * j - 1.0);
    }
    return sum;
}

// Accelerated alternating (eta) series with Chebyshev-derived weights.
Complex zeta_alternating(Complex s, const Complex& eta_factor) {
    const double t = std::abs(s.imag());
    const int n = 30 + static_cast<int>(1.4 * t);
    // d_k weights by forward recurrence on the summands
    std::vector<double> d(n + 1);
    double term = 1.0 / static_cast<double>(n);  // i = 0 summand
    double acc = term;
    d[0] = static_cast<double>(n) * acc;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * static_cast<double>(n + i - 1) * static_cast<double>(n - i + 1) /
                (static_cast<double>(2 * i) * static_cast<double>(2 * i - 1));
        acc += term;
        d[i] = static_cast<double>(n) * acc;
    }
    Complex sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += sign * (d[k] - d[n]) * std::exp(-s * std::log(static_cast<double>(k + 1)));
        sign = -sign;
    }
    return sum / (-d[n] * eta_factor);
}

Complex zeta_right_halfplane(Complex s) {
    const Complex eta_factor = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    // the eta conversion factor vanishes on a discrete set along Re(s) = 1;
    // switch to Euler-Maclaurin near those points (and for tall arguments,
    // where the weight recurrence would overflow)
    if (std::abs(eta_factor) < 1e-2 || std::abs(s.imag()) > 100.0) return zeta_euler_maclaurin(s);
    return zeta_alternating(s, eta_factor);
}

}  // namespace

Complex zeta_complex(Complex s) {
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw singularity_error("hyperbolic: zeta pole at s = 1");
    if (s.real() >= 0.5) return zeta_right_halfplane(s);
    // functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const Complex one_minus_s = Complex(1.0, 0.0) - s;
    const Complex chi = std::exp(s * std::numbers::ln2) * std::exp((s - 1.0) * std::log(kPi)) *
                        std::sin(kPi * s / 2.0) * gamma_complex(one_minus_s);
    return chi * zeta_right_halfplane(one_minus_s);
}

Complex xi_complex(Complex s) {
    if (std::abs(s) < 1e-12 || std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw singularity_error("hyperbolic: xi pole at s = 0 or 1");
    return std::exp(-s / 2.0 * std::log(kPi)) * gamma_complex(s / 2.0) * zeta_complex(s);
}

Complex zeta_quotient(Complex s) {
    const Complex denom = zeta_complex(2.0 * s);
    if (std::abs(denom) < 1e-12)
        throw conditioning_error("hyperbolic: zeta(2s) numerically zero in Z(s)");
    return zeta_complex(2.0 * s - 1.0) / denom;
}

Complex scattering_coefficient(Complex s) {
    const Complex denom = xi_complex(2.0 * s);
    if (std::abs(denom) < 1e-300)
        throw conditioning_error("hyperbolic: xi(2s) numerically zero in S(s)");
    return xi_complex(2.0 * s - 1.0) / denom;
}

Complex scattering_coefficient_az(Complex s) {
    const Complex gs = gamma_complex(s);
    if (std::abs(gs) < 1e-300)
        throw conditioning_error("hyperbolic: Gamma(s) numerically zero in A(s)");
    const Complex A = gamma_complex(Complex(0.5, 0.0)) * gamma_complex(s - 0.5) / gs;
    return A * zeta_quotient(s);
}

namespace {

double wrap_to_pi(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

}  // namespace

std::vector<ScatterSample> scattering_phase(std::span<const double> k_grid) {
    if (k_grid.empty()) throw parameter_error("hyperbolic: empty k grid");
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        if (std::abs(k_grid[i]) < 1e-8)
            throw parameter_error("hyperbolic: scattering phase diverges at k = 0");
        if (i > 0 && !(k_grid[i] > k_grid[i - 1]))
            throw parameter_error("hyperbolic: k grid must be strictly increasing");
    }
    constexpr double kDiffStep = 1e-3;
    const auto Z_at = [](double k) { return zeta_quotient(Complex(0.5, k)); };
    const auto S_at = [](double k) { return scattering_coefficient(Complex(0.5, k)); };

    std::vector<ScatterSample> out(k_grid.size());
    double theta_z = 0.0, theta_s = 0.0;
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double k = k_grid[i];
        const double arg_z = std::arg(Z_at(k));
        const double arg_s = std::arg(S_at(k));
        if (i == 0) {
            theta_z = arg_z;
            theta_s = arg_s;
        } else {
            const double dz = wrap_to_pi(arg_z - wrap_to_pi(theta_z));
            if (std::abs(dz) >= kPi / 2.0)
                throw numerical_error("hyperbolic: k grid too coarse for phase unwrapping");
            theta_z += dz;
            theta_s += wrap_to_pi(arg_s - wrap_to_pi(theta_s));
        }
        // derivative from freshly unwrapped neighbours of this grid point
        const double dp = wrap_to_pi(std::arg(Z_at(k + kDiffStep)) - arg_z);
        const double dm = wrap_to_pi(std::arg(Z_at(k - kDiffStep)) - arg_z);
        out[i] = ScatterSample{k, 0.5 * theta_z, 0.5 * (dp - dm) / (2.0 * kDiffStep),
                               0.5 * theta_s};
    }
    return out;
}

WavefrontCircle wavefront(const MoebiusMap& m, double level) {
    if (!(level > 0.0)) throw parameter_error("hyperbolic: wavefront level must be positive");
    if (m.c == 0)
        throw degenerate_wavefront_error(
            "hyperbolic: q_i = 0 degenerates to the horizontal line y = level * |q_{i-1}|");
    WavefrontCircle w;
    w.level = level;
    w.q_i = m.c;
    w.q_im1 = m.d;
    w.tangency = -static_cast<double>(m.d) / static_cast<double>(m.c);
    w.radius = 1.0 / (2.0 * level * level * static_cast<double>(m.c) * static_cast<double>(m.c));
    return w;
}

}  // namespace phaselock::hyperbolic
