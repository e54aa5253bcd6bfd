#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phaselock/confrac.hpp"

using namespace phaselock;
using confrac::ContinuedFraction;
using confrac::Convergent;
using confrac::Rational;

TEST_CASE("rational arithmetic is exact and guarded") {
    CHECK(Rational(6, 10) == Rational(3, 5));
    CHECK(Rational(-6, -10) == Rational(3, 5));
    CHECK(Rational(6, -10) == Rational(-3, 5));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK_THROWS_AS(Rational(1, 0), parameter_error);

    const Rational big(1'000'000'000'000'000'000LL, 1);
    CHECK_THROWS_AS(big * big, numerical_error);
}

TEST_CASE("expansion of rationals") {
    const auto cf = confrac::cf_expand(Rational(3, 5));
    CHECK(cf.a0 == 0);
    REQUIRE(cf.quotients.size() == 3);
    CHECK(cf.quotients[0] == 1);
    CHECK(cf.quotients[1] == 1);
    CHECK(cf.quotients[2] == 2);
    CHECK_FALSE(cf.truncated);

    const auto whole = confrac::cf_expand(Rational(1, 1));
    CHECK(whole.a0 == 1);
    CHECK(whole.quotients.empty());

    const auto neg = confrac::cf_expand(Rational(-7, 3));  // floor(-7/3) = -3
    CHECK(neg.a0 == -3);
    CHECK(confrac::cf_value(neg) == Rational(-7, 3));
}

TEST_CASE("expansion of sqrt(2) is all twos") {
    const auto cf = confrac::cf_expand(std::sqrt(2.0), 6);
    CHECK(cf.a0 == 1);
    REQUIRE(cf.quotients.size() == 5);
    for (auto a : cf.quotients) CHECK(a == 2);
    CHECK(cf.truncated);

    // reconstruction stays within the diophantine bound of the last convergent
    const auto conv = confrac::convergents(cf);
    const auto& last = conv.back();
    CHECK(std::abs(std::sqrt(2.0) - last.value()) <=
          1.0 / (2.0 * static_cast<double>(last.q) * static_cast<double>(last.q)));
}

TEST_CASE("convergent ladder and determinant identity") {
    const auto conv = confrac::convergents(confrac::cf_expand(Rational(3, 5)));
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == Convergent{0, 1});
    CHECK(conv[1] == Convergent{1, 1});
    CHECK(conv[2] == Convergent{1, 2});
    CHECK(conv[3] == Convergent{3, 5});
    for (std::size_t i = 1; i < conv.size(); ++i) {
        const auto det = conv[i].p * conv[i - 1].q - conv[i - 1].p * conv[i].q;
        CHECK(std::abs(det) == 1);
    }

    const auto single = confrac::convergents(confrac::cf_expand(Rational(4, 1)));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Convergent{4, 1});
}

TEST_CASE("round trip over all reduced fractions with q <= 500") {
    for (std::int64_t q = 1; q <= 500; ++q)
        for (std::int64_t p = 0; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational x(p, q);
            CHECK(confrac::cf_value(confrac::cf_expand(x)) == x);
        }
}

TEST_CASE("diophantine bound") {
    CHECK(confrac::dioph_check(0.6, Convergent{1, 2}, 2));
    CHECK(confrac::dioph_check(0.6, Convergent{3, 5}, 7));  // zero error
    CHECK(confrac::dioph_check(std::sqrt(2.0), Convergent{1, 1}, 2));

    SUBCASE("holds for every convergent on an irrational grid") {
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int j = 1; j <= 1000; ++j) {
            const double x = std::fmod(static_cast<double>(j) * golden, 1.0);
            const auto cf = confrac::cf_expand(x, 20);
            const auto conv = confrac::convergents(cf);
            for (std::size_t i = 0; i + 1 < conv.size(); ++i) {
                // below the double-precision horizon the bound itself is
                // smaller than representation noise; skip those tail terms
                const double bound = 1.0 / (static_cast<double>(cf.quotients[i]) *
                                            static_cast<double>(conv[i].q) *
                                            static_cast<double>(conv[i].q));
                if (bound < 1e-12) continue;
                REQUIRE(confrac::dioph_check(x, conv[i], cf.quotients[i]));
            }
        }
    }
}

TEST_CASE("filter quotient") {
    CHECK(confrac::filter_quotient(10e6, 300e3, 1) == 33);
    CHECK(confrac::filter_quotient(10e6, 300e3, 5) == 6);
    CHECK(confrac::filter_quotient(1.0, 1.0, 1) == 1);
    CHECK_THROWS_AS(confrac::filter_quotient(0.0, 1.0, 1), parameter_error);
}

TEST_CASE("basin edges") {
    SUBCASE("around 1/1 with cut 33") {
        const auto [lo, hi] = confrac::basin_edges(Convergent{1, 1}, 33);
        CHECK(lo == Rational(33, 34));
        CHECK(hi == Rational(34, 33));
    }
    SUBCASE("around 1/2 with cut 1") {
        const auto [lo, hi] = confrac::basin_edges(Convergent{1, 2}, 1);
        CHECK(lo == Rational(1, 3));
        CHECK(hi == Rational(2, 3));
    }
    SUBCASE("around 3/5 with the q = 5 filter cut") {
        // exact evaluation of {0;1,1,2,6} and {0;1,1,1,1,6}
        const auto [lo, hi] = confrac::basin_edges(Convergent{3, 5}, 6);
        CHECK(lo == Rational(19, 32));
        CHECK(hi == Rational(20, 33));
    }
    SUBCASE("edges straddle the fraction for all of F_20") {
        for (const auto& f : confrac::farey_sequence(20))
            for (std::int64_t a : {1, 2, 5, 17, 40}) {
                const auto [lo, hi] = confrac::basin_edges(f, a);
                REQUIRE(lo < f.rational());
                REQUIRE(f.rational() < hi);
            }
    }
    CHECK_THROWS_AS(confrac::basin_edges(Convergent{2, 4}, 3), parameter_error);
}

TEST_CASE("Farey sequences") {
    const auto f1 = confrac::farey_sequence(1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == Convergent{0, 1});
    CHECK(f1[1] == Convergent{1, 1});

    const auto f3 = confrac::farey_sequence(3);
    REQUIRE(f3.size() == 5);
    CHECK(f3[1] == Convergent{1, 3});
    CHECK(f3[2] == Convergent{1, 2});
    CHECK(f3[3] == Convergent{2, 3});

    CHECK(confrac::farey_sequence(5).size() == 11);

    SUBCASE("neighbours satisfy the unimodular relation") {
        for (int Q : {2, 7, 17, 30}) {
            const auto f = confrac::farey_sequence(Q);
            for (std::size_t i = 0; i + 1 < f.size(); ++i)
                REQUIRE(f[i + 1].p * f[i].q - f[i].p * f[i + 1].q == 1);
        }
    }
}

TEST_CASE("Ford circles") {
    const auto c0 = confrac::ford(Convergent{0, 1});
    CHECK(c0.center_x == 0.0);
    CHECK(c0.center_y == doctest::Approx(0.5));
    CHECK(c0.radius == doctest::Approx(0.5));

    const auto c12 = confrac::ford(Convergent{1, 2});
    CHECK(c12.center_x == doctest::Approx(0.5));
    CHECK(c12.center_y == doctest::Approx(0.125));
    CHECK(c12.radius == doctest::Approx(0.125));

    SUBCASE("tangency is the determinant test") {
        const auto f12 = confrac::ford(Convergent{1, 2});
        const auto f13 = confrac::ford(Convergent{1, 3});
        const auto f23 = confrac::ford(Convergent{2, 3});
        CHECK(confrac::ford_tangent(f12, f13));
        CHECK_FALSE(confrac::ford_tangent(f13, f23));

        // geometric cross-check: centre distance vs radius sum
        const auto dist = [](const confrac::FordCircle& a, const confrac::FordCircle& b) {
            return std::hypot(a.center_x - b.center_x, a.center_y - b.center_y);
        };
        CHECK(dist(f12, f13) == doctest::Approx(f12.radius + f13.radius).epsilon(1e-12));
        CHECK(dist(f13, f23) > f13.radius + f23.radius + 1e-12);
    }

    SUBCASE("circles of distinct Farey fractions never overlap") {
        const auto f = confrac::farey_sequence(30);
        std::vector<confrac::FordCircle> circles;
        circles.reserve(f.size());
        for (const auto& x : f) circles.push_back(confrac::ford(x));
        for (std::size_t i = 0; i < circles.size(); ++i)
            for (std::size_t j = i + 1; j < circles.size(); ++j) {
                const double d = std::hypot(circles[i].center_x - circles[j].center_x,
                                            circles[i].center_y - circles[j].center_y);
                REQUIRE(d >= circles[i].radius + circles[j].radius - 1e-12);
            }
    }

    SUBCASE("tangency equals Farey adjacency along F_30") {
        const auto f = confrac::farey_sequence(30);
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            REQUIRE(confrac::ford_tangent(confrac::ford(f[i]), confrac::ford(f[i + 1])));
    }
}
