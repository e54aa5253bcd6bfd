#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "phaselock/errors.hpp"

namespace phaselock::quantum {

using Complex = std::complex<double>;

/// Minimal dense complex matrix; just enough for q x q operator algebra.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

    static Matrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Complex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Complex trace() const;
    double max_abs() const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

struct StateVector {
    std::vector<Complex> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
};

Complex inner(const StateVector& bra, const StateVector& ket);

/// Discrete-Fourier phase state |theta_p> with amplitudes
/// exp(i n (theta0 + 2 pi p / q)) / sqrt(q).
StateVector phase_state(std::size_t q, std::size_t p, double theta0 = 0.0);

/// Hermitian phase operator sum_p theta_p |theta_p><theta_p|, theta_p = theta0 + 2 pi p/q.
Matrix pegg_barnett(std::size_t q, double theta0 = 0.0);

/// Restriction to fractions in lowest terms: sum over p coprime to q of
/// (2 pi p/q) |theta_p><theta_p|.
Matrix lock_operator(std::size_t q);

/// Same restriction without the angular weights. Entries are exactly
/// c_q(n - l) / q; idempotent with trace phi(q).
Matrix lock_projector(std::size_t q);

/// Exact integer numerator of a lock-projector entry: c_q(n - l).
std::int64_t lock_projector_numerator(std::size_t q, std::size_t n, std::size_t l);

enum class ExpectationKind {
    paper_range,  // double sum over n, l in [0, phi(q)] (inclusive)
    full_range,   // n, l over the whole dimension [0, q)
    spectral,     // true quadratic form with the weighted lock operator
};

/// Locked-phase expectation in the uniform-superposition state
/// |beta> = q^{-1/2} sum_n exp(i n beta) |n>. For the range kinds the value is
/// (pi/q^2) sum c_q(l-n) exp(i beta (n-l)), evaluated both as a Ramanujan
/// double sum and as a quadratic form; the two routes must agree to 1e-10.
double expectation_locked_phase(std::size_t q, double beta,
                                ExpectationKind kind = ExpectationKind::paper_range);

/// Truncated lowering operator E = sum_{n<q-1} |n><n+1|.
Matrix susskind_E(std::size_t q);

/// Truncated coherent state; amplitudes assembled in log space.
StateVector coherent_state(Complex alpha, std::size_t dim);

struct PartitionResult {
    double partial = 0.0;        // sum_{n<=n_max} n^{-beta}
    double tail_estimate = 0.0;  // midpoint integral estimate of the remainder
    double tail_bound = 0.0;     // rigorous bracket width around the estimate
    double value() const { return partial + tail_estimate; }
};

/// Partition function of the log-spectrum Hamiltonian; converges to zeta(beta).
PartitionResult bc_partition(double beta, std::uint64_t n_max);

struct KmsPoint {
    std::uint32_t q = 1;
    double beta = 0.0;
    double value = 0.0;
};

/// Equilibrium expectation of the phase operator e_q at inverse temperature
/// beta > 1: q^{-beta} prod_{p | q} (1 - p^{beta-1}) / (1 - p^{-1}).
KmsPoint kms_expectation(std::uint32_t q, double beta);

/// mu_q |n> = |q n>.
std::uint64_t shift_action(std::uint32_t q, std::uint64_t n);

/// e_q^{(p)} |n> = exp(2 pi i p n / q) |n>; returns the phase factor.
Complex phase_action(std::uint32_t q, std::int64_t p, std::uint64_t n);

}  // namespace phaselock::quantum
