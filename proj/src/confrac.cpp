#include "phaselock/confrac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phaselock::confrac {

ContinuedFraction cf_expand(const Rational& x) {
    ContinuedFraction cf;
    std::int64_t n = x.num;
    std::int64_t d = x.den;
    // floor division for the integer part so negative inputs expand correctly
    std::int64_t a0 = n / d;
    if (n % d != 0 && (n < 0)) --a0;
    cf.a0 = a0;
    n -= a0 * d;
    // Euclid on the fractional part; the final quotient comes out >= 2 for
    // any reduced fraction, which is the canonical form.
    while (n != 0) {
        const std::int64_t a = d / n;
        const std::int64_t r = d % n;
        cf.quotients.push_back(a);
        d = n;
        n = r;
    }
    return cf;
}

ContinuedFraction cf_expand(double x, std::size_t max_terms) {
    if (max_terms == 0) throw parameter_error("confrac: max_terms must be >= 1");
    if (!std::isfinite(x)) throw parameter_error("confrac: non-finite input");
    ContinuedFraction cf;
    double a0 = std::floor(x);
    cf.a0 = static_cast<std::int64_t>(a0);
    double f = x - a0;

    // Partial quotients past the precision horizon q_i^2 > 1/eps are noise;
    // stop there and flag the expansion.
    const double q_horizon = 1.0 / std::sqrt(std::numeric_limits<double>::epsilon());
    std::int64_t q_prev = 0, q_cur = 1;
    while (cf.quotients.size() + 1 < max_terms) {
        if (f <= 0.0) return cf;  // terminated exactly
        const double inv = 1.0 / f;
        const double a = std::floor(inv);
        if (a >= q_horizon * q_horizon) return cf;  // effectively an integer residual
        const std::int64_t ai = static_cast<std::int64_t>(a);
        const std::int64_t q_next = ai * q_cur + q_prev;
        if (static_cast<double>(q_next) > q_horizon) {
            cf.truncated = true;
            return cf;
        }
        cf.quotients.push_back(ai);
        q_prev = q_cur;
        q_cur = q_next;
        f = inv - a;
    }
    cf.truncated = true;
    return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.terms());
    __int128 p_prev = 1, q_prev = 0;
    __int128 p_cur = cf.a0, q_cur = 1;
    out.push_back({detail::narrow_i128(p_cur, "convergent"), detail::narrow_i128(q_cur, "convergent")});
    for (std::int64_t a : cf.quotients) {
        if (a < 1) throw parameter_error("confrac: partial quotients must be >= 1");
        const __int128 p_next = static_cast<__int128>(a) * p_cur + p_prev;
        const __int128 q_next = static_cast<__int128>(a) * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        out.push_back({detail::narrow_i128(p_cur, "convergent"), detail::narrow_i128(q_cur, "convergent")});
    }
    return out;
}

Rational cf_value(const ContinuedFraction& cf) {
    const auto conv = convergents(cf);
    const Convergent& last = conv.back();
    return Rational(last.p, last.q);
}

bool dioph_check(double x, const Convergent& conv, std::int64_t next_quotient) {
    if (next_quotient < 1) throw parameter_error("confrac: next quotient must be >= 1");
    const double err = std::abs(x - conv.value());
    const double bound = 1.0 / (static_cast<double>(next_quotient) * static_cast<double>(conv.q) *
                                static_cast<double>(conv.q));
    return err <= bound;
}

std::int64_t filter_quotient(double f0_hz, double fc_hz, std::int64_t q) {
    if (!(f0_hz > 0.0) || !(fc_hz > 0.0)) throw parameter_error("confrac: frequencies must be positive");
    if (q < 1) throw parameter_error("confrac: denominator must be >= 1");
    return static_cast<std::int64_t>(std::floor(f0_hz / (fc_hz * static_cast<double>(q))));
}

std::pair<Rational, Rational> basin_edges(const Convergent& frac, std::int64_t a_cut) {
    if (a_cut < 1) throw parameter_error("confrac: basin cut must be >= 1");
    if (frac.q < 1 || std::gcd(frac.p < 0 ? -frac.p : frac.p, frac.q) != 1)
        throw parameter_error("confrac: fraction must be in lowest terms");

    ContinuedFraction rep1 = cf_expand(Rational(frac.p, frac.q));
    // Second representation: {.., a_i - 1, 1}, or {a0 - 1; 1} for a bare integer.
    ContinuedFraction rep2 = rep1;
    if (rep2.quotients.empty()) {
        rep2.a0 -= 1;
        rep2.quotients.push_back(1);
    } else {
        // canonical final quotient is >= 2, so decrementing keeps it valid
        rep2.quotients.back() -= 1;
        rep2.quotients.push_back(1);
    }

    rep1.quotients.push_back(a_cut);
    rep2.quotients.push_back(a_cut);
    Rational e1 = cf_value(rep1);
    Rational e2 = cf_value(rep2);
    if (e2 < e1) std::swap(e1, e2);
    return {e1, e2};
}

std::vector<Convergent> farey_sequence(std::int64_t Q) {
    if (Q < 1) throw parameter_error("confrac: Farey order must be >= 1");
    std::vector<Convergent> out;
    // standard next-term recurrence starting from 0/1, 1/Q
    std::int64_t a = 0, b = 1, c = 1, d = Q;
    out.push_back({a, b});
    while (c <= Q) {
        out.push_back({c, d});
        const std::int64_t k = (Q + b) / d;
        const std::int64_t a2 = k * c - a;
        const std::int64_t b2 = k * d - b;
        a = c;
        b = d;
        c = a2;
        d = b2;
    }
    return out;
}

FordCircle ford(const Convergent& frac) {
    if (frac.q < 1 || std::gcd(frac.p < 0 ? -frac.p : frac.p, frac.q) != 1)
        throw parameter_error("confrac: Ford circle needs a reduced fraction");
    FordCircle c;
    c.frac = frac;
    const double q2 = static_cast<double>(frac.q) * static_cast<double>(frac.q);
    c.center_x = frac.value();
    c.center_y = 0.5 / q2;
    c.radius = 0.5 / q2;
    return c;
}

bool ford_tangent(const FordCircle& c1, const FordCircle& c2) {
    const __int128 det = static_cast<__int128>(c1.frac.p) * c2.frac.q -
                         static_cast<__int128>(c2.frac.p) * c1.frac.q;
    return det == 1 || det == -1;
}

}  // namespace phaselock::confrac
