#pragma once

#include <cstdint>
#include <vector>

#include "phaselock/errors.hpp"

namespace phaselock::arith {

/// Sieved tables of the classical multiplicative functions up to a fixed bound.
/// Immutable after construction; lookups are plain array reads and thread-safe.
class ArithTable {
public:
    static constexpr std::uint32_t kMaxLimit = 50'000'000;

    explicit ArithTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }

    std::uint32_t totient(std::uint32_t n) const {
        check_range(n);
        return totient_[n];
    }
    int moebius(std::uint32_t n) const {
        check_range(n);
        return moebius_[n];
    }
    std::uint32_t smallest_prime_factor(std::uint32_t n) const {
        check_range(n);
        return spf_[n];
    }
    bool is_prime(std::uint32_t n) const { return n >= 2 && smallest_prime_factor(n) == n; }

private:
    void check_range(std::uint32_t n) const {
        if (n == 0 || n > limit_)
            throw parameter_error("arith: argument " + std::to_string(n) +
                                  " outside table range [1, " + std::to_string(limit_) + "]");
    }

    std::uint32_t limit_;
    std::vector<std::uint32_t> totient_;
    std::vector<std::int8_t> moebius_;
    std::vector<std::uint32_t> spf_;
};

ArithTable build_table(std::uint32_t limit);

struct ClassicalValues {
    std::uint32_t phi;
    int mu;
    double mangoldt;
};

ClassicalValues classical_functions(std::uint32_t n, const ArithTable& table);

/// ln b if n = b^k with b prime, else 0.
double mangoldt(std::uint32_t n, const ArithTable& table);

/// Congruence restriction attached to a resonance p/q. The residue is stored
/// reduced mod the modulus, so (1 mod 1) means the unrestricted case.
struct MangoldtSpec {
    std::uint32_t residue = 0;
    std::uint32_t modulus = 1;

    MangoldtSpec() = default;
    MangoldtSpec(std::uint32_t p, std::uint32_t q);
};

double mangoldt_general(std::uint32_t n, const MangoldtSpec& spec, const ArithTable& table);

/// b(n) = Mangoldt(n) * totient(n) / n.
double mangoldt_modified(std::uint32_t n, const ArithTable& table);

/// Ramanujan sum c_q(n), exact integer via mu(q1) phi(q) / phi(q1), q1 = q / gcd(q, n).
/// Periodic in n with period q; negative n is reduced mod q.
std::int64_t ramanujan_sum(std::uint32_t q, std::int64_t n, const ArithTable& table);

bool is_prime_power(std::uint32_t n, const ArithTable& table);

enum class SummatoryKind { mangoldt_general, mangoldt_modified, moebius };

struct SummatoryResult {
    std::uint64_t t = 0;
    double average = 0.0;  // (1/t) sum_{n<=t} f(n)
    double epsilon = 0.0;  // average minus the kind-specific limit value
};

SummatoryResult summatory_average(SummatoryKind kind, std::uint32_t t, const ArithTable& table,
                                  const MangoldtSpec& spec = MangoldtSpec());

/// Raw summatory Moebius function M(t).
std::int64_t mertens(std::uint32_t t, const ArithTable& table);

/// epsilon(t) for every t = 1..t_max in one pass; feeds the spectral pipeline.
std::vector<double> epsilon_series(SummatoryKind kind, std::uint32_t t_max, const ArithTable& table,
                                   const MangoldtSpec& spec = MangoldtSpec());

struct RamanujanExpansion {
    double value = 0.0;                 // partial sum at Q
    std::vector<double> partial_sums;   // after each q = 1..Q
    std::vector<double> cesaro;         // running mean of the partial sums
};

/// Truncated dual expansion sum_{q<=Q} mu(q)/phi(q) * c_q(n).
RamanujanExpansion ramanujan_expansion_partial(std::uint32_t n, std::uint32_t Q, const ArithTable& table);

// Table-free variants (trial division); intended for small arguments where
// carrying a table around would be noise.
std::uint64_t totient_of(std::uint64_t n);
int moebius_of(std::uint64_t n);
double mangoldt_of(std::uint64_t n);
bool is_prime_power_of(std::uint64_t n);
std::int64_t ramanujan_sum_of(std::uint64_t q, std::int64_t n);

}  // namespace phaselock::arith
