#include "phaselock/quantum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "phaselock/arith.hpp"

namespace phaselock::quantum {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (rhs.n_ != n_) throw parameter_error("quantum: dimension mismatch");
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Complex v = at(i, k);
            if (v == Complex{}) continue;
            for (std::size_t j = 0; j < n_; ++j) m.at(i, j) += v * rhs.at(k, j);
        }
    return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rhs.n_ != n_) throw parameter_error("quantum: dimension mismatch");
    Matrix m(n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) m.a_[i] = a_[i] - rhs.a_[i];
    return m;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

Complex inner(const StateVector& bra, const StateVector& ket) {
    if (bra.dim() != ket.dim()) throw parameter_error("quantum: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < bra.dim(); ++i) s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
    return s;
}

StateVector phase_state(std::size_t q, std::size_t p, double theta0) {
    if (q == 0) throw parameter_error("quantum: dimension must be positive");
    if (p >= q) throw parameter_error("quantum: phase index p must lie in [0, q)");
    StateVector v;
    v.amplitudes.resize(q);
    const double theta_p = theta0 + kTwoPi * static_cast<double>(p) / static_cast<double>(q);
    const double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::size_t n = 0; n < q; ++n) {
        const double ph = theta_p * static_cast<double>(n);
        v.amplitudes[n] = Complex(std::cos(ph), std::sin(ph)) * inv_sqrt_q;
    }
    return v;
}

namespace {

Matrix weighted_phase_sum(std::size_t q, double theta0, bool coprime_only, bool unit_weights) {
    Matrix m(q);
    for (std::size_t p = 0; p < q; ++p) {
        if (coprime_only && std::gcd(p, q) != 1) continue;
        const double theta_p = theta0 + kTwoPi * static_cast<double>(p) / static_cast<double>(q);
        const double w = unit_weights ? 1.0 : theta_p;
        const StateVector st = phase_state(q, p, theta0);
        for (std::size_t n = 0; n < q; ++n)
            for (std::size_t l = 0; l < q; ++l)
                m.at(n, l) += w * st.amplitudes[n] * std::conj(st.amplitudes[l]);
    }
    return m;
}

}  // namespace

Matrix pegg_barnett(std::size_t q, double theta0) {
    if (q == 0) throw parameter_error("quantum: dimension must be positive");
    return weighted_phase_sum(q, theta0, false, false);
}

Matrix lock_operator(std::size_t q) {
    if (q == 0) throw parameter_error("quantum: dimension must be positive");
    return weighted_phase_sum(q, 0.0, true, false);
}

std::int64_t lock_projector_numerator(std::size_t q, std::size_t n, std::size_t l) {
    if (q == 0 || n >= q || l >= q) throw parameter_error("quantum: bad projector index");
    return arith::ramanujan_sum_of(q, static_cast<std::int64_t>(n) - static_cast<std::int64_t>(l));
}

Matrix lock_projector(std::size_t q) {
    if (q == 0) throw parameter_error("quantum: dimension must be positive");
    Matrix m(q);
    // entries depend on n - l only; q distinct Ramanujan values cover the matrix
    std::vector<double> row(q);
    for (std::size_t d = 0; d < q; ++d)
        row[d] = static_cast<double>(arith::ramanujan_sum_of(q, static_cast<std::int64_t>(d))) /
                 static_cast<double>(q);
    for (std::size_t n = 0; n < q; ++n)
        for (std::size_t l = 0; l < q; ++l) {
            const std::size_t d = n >= l ? n - l : l - n;
            m.at(n, l) = row[d];
        }
    return m;
}

double expectation_locked_phase(std::size_t q, double beta, ExpectationKind kind) {
    if (q == 0) throw parameter_error("quantum: dimension must be positive");
    if (q == 1) return 0.0;  // the single admissible phase is theta_0 = 0
    const double qd = static_cast<double>(q);

    if (kind == ExpectationKind::spectral) {
        double total = 0.0;
        for (std::size_t p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Complex amp = 0.0;
            const double x = beta - kTwoPi * static_cast<double>(p) / qd;
            for (std::size_t n = 0; n < q; ++n)
                amp += Complex(std::cos(x * static_cast<double>(n)),
                               std::sin(x * static_cast<double>(n)));
            total += kTwoPi * static_cast<double>(p) / qd * std::norm(amp) / (qd * qd);
        }
        return total;
    }

    const std::size_t range =
        kind == ExpectationKind::paper_range
            ? std::min(q, static_cast<std::size_t>(arith::totient_of(q)) + 1)
            : q;

    // route (a): quadratic form of pi * lock_projector truncated to the range
    const Matrix proj = lock_projector(q);
    Complex quad = 0.0;
    for (std::size_t n = 0; n < range; ++n)
        for (std::size_t l = 0; l < range; ++l) {
            const double ph = beta * (static_cast<double>(l) - static_cast<double>(n));
            quad += proj.at(n, l) * Complex(std::cos(ph), std::sin(ph));
        }
    const double route_a = kPi / qd * quad.real();

    // route (b): Ramanujan double sum
    Complex dsum = 0.0;
    for (std::size_t n = 0; n < range; ++n)
        for (std::size_t l = 0; l < range; ++l) {
            const auto c = static_cast<double>(
                lock_projector_numerator(q, l, n));  // c_q(l - n)
            const double ph = beta * (static_cast<double>(n) - static_cast<double>(l));
            dsum += c * Complex(std::cos(ph), std::sin(ph));
        }
    if (std::abs(dsum.imag()) / (qd * qd) > 1e-10)
        throw numerical_error("quantum: expectation has a nonzero imaginary residue");
    const double route_b = kPi / (qd * qd) * dsum.real();

    if (std::abs(route_a - route_b) > 1e-10)
        throw numerical_error("quantum: expectation routes disagree beyond 1e-10");
    return route_b;
}

Matrix susskind_E(std::size_t q) {
    if (q < 2) throw parameter_error("quantum: lowering operator needs dimension >= 2");
    Matrix m(q);
    for (std::size_t n = 0; n + 1 < q; ++n) m.at(n, n + 1) = 1.0;
    return m;
}

StateVector coherent_state(Complex alpha, std::size_t dim) {
    if (dim == 0) throw parameter_error("quantum: dimension must be positive");
    StateVector v;
    v.amplitudes.resize(dim);
    if (alpha == Complex{}) {
        v.amplitudes[0] = 1.0;
        return v;
    }
    const double log_abs = std::log(std::abs(alpha));
    const double arg = std::arg(alpha);
    const double head = -0.5 * std::norm(alpha);
    for (std::size_t n = 0; n < dim; ++n) {
        const double nn = static_cast<double>(n);
        const double lg = head + nn * log_abs - 0.5 * std::lgamma(nn + 1.0);
        v.amplitudes[n] = std::exp(lg) * Complex(std::cos(nn * arg), std::sin(nn * arg));
    }
    return v;
}

PartitionResult bc_partition(double beta, std::uint64_t n_max) {
    if (!(beta > 1.0))
        throw parameter_error(
            "quantum: partition function diverges for beta <= 1 (pole of the Riemann zeta function)");
    if (n_max == 0) throw parameter_error("quantum: n_max must be positive");
    PartitionResult r;
    double sum = 0.0;
    for (std::uint64_t n = n_max; n >= 1; --n) sum += std::pow(static_cast<double>(n), -beta);
    r.partial = sum;
    const double nm = static_cast<double>(n_max);
    r.tail_estimate = std::pow(nm + 0.5, 1.0 - beta) / (beta - 1.0);
    const double hi = std::pow(nm, 1.0 - beta) / (beta - 1.0);
    const double lo = std::pow(nm + 1.0, 1.0 - beta) / (beta - 1.0);
    r.tail_bound = hi - lo;
    return r;
}

KmsPoint kms_expectation(std::uint32_t q, double beta) {
    if (q == 0) throw parameter_error("quantum: q must be positive");
    if (!(beta > 1.0))
        throw parameter_error("quantum: KMS expectation is defined for beta > 1");
    double v = std::pow(static_cast<double>(q), -beta);
    std::uint32_t m = q;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            v *= (1.0 - std::pow(static_cast<double>(p), beta - 1.0)) /
                 (1.0 - 1.0 / static_cast<double>(p));
        }
    }
    if (m > 1)
        v *= (1.0 - std::pow(static_cast<double>(m), beta - 1.0)) /
             (1.0 - 1.0 / static_cast<double>(m));
    return KmsPoint{q, beta, v};
}

std::uint64_t shift_action(std::uint32_t q, std::uint64_t n) {
    if (q == 0) throw parameter_error("quantum: q must be positive");
    if (n > UINT64_MAX / q) throw numerical_error("quantum: shifted index overflows");
    return static_cast<std::uint64_t>(q) * n;
}

Complex phase_action(std::uint32_t q, std::int64_t p, std::uint64_t n) {
    if (q == 0) throw parameter_error("quantum: q must be positive");
    const std::int64_t pr = ((p % q) + q) % q;
    if (q > 1 && std::gcd(static_cast<std::uint64_t>(pr), static_cast<std::uint64_t>(q)) != 1)
        throw parameter_error("quantum: phase action requires gcd(p, q) = 1");
    const std::uint64_t r = (static_cast<std::uint64_t>(pr) * (n % q)) % q;
    const double ph = kTwoPi * static_cast<double>(r) / static_cast<double>(q);
    return Complex(std::cos(ph), std::sin(ph));
}

}  // namespace phaselock::quantum
