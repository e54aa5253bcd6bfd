#include "phaselock/arith.hpp"

#include <cmath>
#include <numeric>

namespace phaselock::arith {

ArithTable::ArithTable(std::uint32_t limit) : limit_(limit) {
    if (limit == 0) throw parameter_error("arith: table limit must be at least 1");
    if (limit > kMaxLimit)
        throw parameter_error("arith: table limit " + std::to_string(limit) +
                              " exceeds the memory budget (max " + std::to_string(kMaxLimit) + ")");

    totient_.assign(limit + 1, 0);
    moebius_.assign(limit + 1, 0);
    spf_.assign(limit + 1, 0);
    totient_[1] = 1;
    moebius_[1] = 1;
    spf_[0] = 0;
    if (limit >= 1) spf_[1] = 1;

    // Linear sieve: every composite is crossed once via its smallest prime factor.
    std::vector<std::uint32_t> primes;
    primes.reserve(limit > 16 ? limit / 8 : 4);
    for (std::uint32_t n = 2; n <= limit; ++n) {
        if (spf_[n] == 0) {
            spf_[n] = n;
            totient_[n] = n - 1;
            moebius_[n] = -1;
            primes.push_back(n);
        }
        for (std::uint32_t p : primes) {
            if (p > spf_[n]) break;
            const std::uint64_t m = static_cast<std::uint64_t>(p) * n;
            if (m > limit) break;
            spf_[m] = p;
            if (n % p == 0) {
                totient_[m] = totient_[n] * p;
                moebius_[m] = 0;
            } else {
                totient_[m] = totient_[n] * (p - 1);
                moebius_[m] = -moebius_[n];
            }
        }
    }
}

ArithTable build_table(std::uint32_t limit) { return ArithTable(limit); }

double mangoldt(std::uint32_t n, const ArithTable& table) {
    if (n < 2) {
        if (n == 0) table.totient(0);  // range error
        return 0.0;
    }
    const std::uint32_t p = table.smallest_prime_factor(n);
    std::uint32_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

ClassicalValues classical_functions(std::uint32_t n, const ArithTable& table) {
    return ClassicalValues{table.totient(n), table.moebius(n), mangoldt(n, table)};
}

MangoldtSpec::MangoldtSpec(std::uint32_t p, std::uint32_t q) {
    if (q == 0) throw parameter_error("arith: modulus must be positive");
    modulus = q;
    residue = p % q;
    if (q > 1 && std::gcd(residue, modulus) != 1)
        throw parameter_error("arith: residue " + std::to_string(residue) +
                              " not coprime to modulus " + std::to_string(modulus));
}

double mangoldt_general(std::uint32_t n, const MangoldtSpec& spec, const ArithTable& table) {
    if (n % spec.modulus != spec.residue) {
        table.totient(n);  // still range-check
        return 0.0;
    }
    return mangoldt(n, table);
}

double mangoldt_modified(std::uint32_t n, const ArithTable& table) {
    const double lam = mangoldt(n, table);
    if (lam == 0.0) return 0.0;
    return lam * static_cast<double>(table.totient(n)) / static_cast<double>(n);
}

std::int64_t ramanujan_sum(std::uint32_t q, std::int64_t n, const ArithTable& table) {
    if (q == 0) throw parameter_error("arith: ramanujan_sum requires q >= 1");
    table.totient(q);
    std::uint32_t r = static_cast<std::uint32_t>(((n % q) + q) % q);
    const std::uint32_t g = r == 0 ? q : std::gcd(q, r);
    const std::uint32_t q1 = q / g;
    const int mu = table.moebius(q1);
    if (mu == 0) return 0;
    // phi(q1) divides phi(q) whenever q1 | q, so the division is exact.
    return static_cast<std::int64_t>(mu) * table.totient(q) / table.totient(q1);
}

bool is_prime_power(std::uint32_t n, const ArithTable& table) {
    if (n < 2) return false;
    const std::uint32_t p = table.smallest_prime_factor(n);
    std::uint32_t m = n;
    while (m % p == 0) m /= p;
    return m == 1;
}

SummatoryResult summatory_average(SummatoryKind kind, std::uint32_t t, const ArithTable& table,
                                  const MangoldtSpec& spec) {
    if (t == 0) throw parameter_error("arith: summatory t must be positive");
    table.totient(t);
    double sum = 0.0;
    double target = 0.0;
    switch (kind) {
        case SummatoryKind::mangoldt_general:
            for (std::uint32_t n = 1; n <= t; ++n) sum += mangoldt_general(n, spec, table);
            target = 1.0 / static_cast<double>(table.totient(spec.modulus));
            break;
        case SummatoryKind::mangoldt_modified:
            for (std::uint32_t n = 1; n <= t; ++n) sum += mangoldt_modified(n, table);
            target = 1.0;
            break;
        case SummatoryKind::moebius:
            for (std::uint32_t n = 1; n <= t; ++n) sum += table.moebius(n);
            target = 0.0;
            break;
    }
    SummatoryResult r;
    r.t = t;
    r.average = sum / static_cast<double>(t);
    r.epsilon = r.average - target;
    return r;
}

std::int64_t mertens(std::uint32_t t, const ArithTable& table) {
    if (t == 0) throw parameter_error("arith: mertens t must be positive");
    table.totient(t);
    std::int64_t m = 0;
    for (std::uint32_t n = 1; n <= t; ++n) m += table.moebius(n);
    return m;
}

std::vector<double> epsilon_series(SummatoryKind kind, std::uint32_t t_max, const ArithTable& table,
                                   const MangoldtSpec& spec) {
    if (t_max == 0) throw parameter_error("arith: epsilon_series t_max must be positive");
    table.totient(t_max);
    double target = 0.0;
    switch (kind) {
        case SummatoryKind::mangoldt_general:
            target = 1.0 / static_cast<double>(table.totient(spec.modulus));
            break;
        case SummatoryKind::mangoldt_modified: target = 1.0; break;
        case SummatoryKind::moebius: target = 0.0; break;
    }
    std::vector<double> eps(t_max);
    double cum = 0.0;
    for (std::uint32_t n = 1; n <= t_max; ++n) {
        switch (kind) {
            case SummatoryKind::mangoldt_general: cum += mangoldt_general(n, spec, table); break;
            case SummatoryKind::mangoldt_modified: cum += mangoldt_modified(n, table); break;
            case SummatoryKind::moebius: cum += table.moebius(n); break;
        }
        eps[n - 1] = cum / static_cast<double>(n) - target;
    }
    return eps;
}

RamanujanExpansion ramanujan_expansion_partial(std::uint32_t n, std::uint32_t Q, const ArithTable& table) {
    if (Q == 0) throw parameter_error("arith: expansion truncation Q must be positive");
    table.totient(Q);
    RamanujanExpansion out;
    out.partial_sums.reserve(Q);
    out.cesaro.reserve(Q);
    double sum = 0.0;
    double cesaro_acc = 0.0;
    for (std::uint32_t q = 1; q <= Q; ++q) {
        const int mu = table.moebius(q);
        if (mu != 0) {
            sum += static_cast<double>(mu) / static_cast<double>(table.totient(q)) *
                   static_cast<double>(ramanujan_sum(q, n, table));
        }
        out.partial_sums.push_back(sum);
        cesaro_acc += sum;
        out.cesaro.push_back(cesaro_acc / static_cast<double>(q));
    }
    out.value = sum;
    return out;
}

namespace {

struct Factors {
    std::uint64_t primes[16];
    std::uint32_t mult[16];
    int count = 0;
};

Factors factorize(std::uint64_t n) {
    Factors f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            f.primes[f.count] = p;
            f.mult[f.count] = 0;
            while (n % p == 0) {
                n /= p;
                ++f.mult[f.count];
            }
            ++f.count;
        }
    }
    if (n > 1) {
        f.primes[f.count] = n;
        f.mult[f.count] = 1;
        ++f.count;
    }
    return f;
}

}  // namespace

std::uint64_t totient_of(std::uint64_t n) {
    if (n == 0) throw parameter_error("arith: totient_of(0)");
    const Factors f = factorize(n);
    std::uint64_t r = n;
    for (int i = 0; i < f.count; ++i) r = r / f.primes[i] * (f.primes[i] - 1);
    return r;
}

int moebius_of(std::uint64_t n) {
    if (n == 0) throw parameter_error("arith: moebius_of(0)");
    const Factors f = factorize(n);
    for (int i = 0; i < f.count; ++i)
        if (f.mult[i] > 1) return 0;
    return f.count % 2 == 0 ? 1 : -1;
}

double mangoldt_of(std::uint64_t n) {
    if (n < 2) return 0.0;
    const Factors f = factorize(n);
    return f.count == 1 ? std::log(static_cast<double>(f.primes[0])) : 0.0;
}

bool is_prime_power_of(std::uint64_t n) {
    return n >= 2 && factorize(n).count == 1;
}

std::int64_t ramanujan_sum_of(std::uint64_t q, std::int64_t n) {
    if (q == 0) throw parameter_error("arith: ramanujan_sum_of requires q >= 1");
    const std::uint64_t r = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(q)) +
                                                        static_cast<std::int64_t>(q)) %
                                                       static_cast<std::int64_t>(q));
    const std::uint64_t g = r == 0 ? q : std::gcd(q, r);
    const std::uint64_t q1 = q / g;
    const int mu = moebius_of(q1);
    if (mu == 0) return 0;
    return static_cast<std::int64_t>(mu) *
           static_cast<std::int64_t>(totient_of(q) / totient_of(q1));
}

}  // namespace phaselock::arith
