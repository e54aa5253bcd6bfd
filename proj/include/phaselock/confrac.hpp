#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "phaselock/rational.hpp"

namespace phaselock::confrac {

/// Canonical continued fraction {a0; a1, a2, ...}. For rational input the
/// expansion terminates with final quotient >= 2 (except the bare {a0;}).
/// `truncated` marks expansions cut short by max_terms or by the double
/// precision horizon.
struct ContinuedFraction {
    std::int64_t a0 = 0;
    std::vector<std::int64_t> quotients;
    bool truncated = false;

    std::size_t terms() const { return quotients.size() + 1; }
};

struct Convergent {
    std::int64_t p = 0;
    std::int64_t q = 1;

    Rational rational() const { return Rational(p, q); }
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    friend bool operator==(const Convergent& a, const Convergent& b) {
        return a.p == b.p && a.q == b.q;
    }
};

ContinuedFraction cf_expand(const Rational& x);
ContinuedFraction cf_expand(double x, std::size_t max_terms);

/// Convergent ladder p_i/q_i via the 2x2 matrix recursion; consecutive pairs
/// satisfy p_i q_{i-1} - p_{i-1} q_i = (-1)^{i-1}.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// Exact value of a finite continued fraction.
Rational cf_value(const ContinuedFraction& cf);

/// |x - p/q| <= 1/(a_next q^2)?
bool dioph_check(double x, const Convergent& conv, std::int64_t next_quotient);

/// Partial-quotient cut imposed by a low-pass of cut-off fc on a reference f0,
/// at convergent denominator q: floor(f0 / (fc q)).
std::int64_t filter_quotient(double f0_hz, double fc_hz, std::int64_t q);

/// Locking-basin edges around p/q: append a_cut to both continued-fraction
/// representations of p/q and evaluate exactly. Returned in increasing order;
/// the edges always straddle p/q.
std::pair<Rational, Rational> basin_edges(const Convergent& frac, std::int64_t a_cut);

/// All reduced fractions in [0,1] with denominator <= Q, ascending.
std::vector<Convergent> farey_sequence(std::int64_t Q);

struct FordCircle {
    Convergent frac;
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 0.0;
};

FordCircle ford(const Convergent& frac);

/// Externally tangent iff |p1 q2 - p2 q1| = 1 (Farey adjacency).
bool ford_tangent(const FordCircle& c1, const FordCircle& c2);

}  // namespace phaselock::confrac
