#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binetkit/finite_identities.hpp"

#include <random>
#include <stdexcept>

using namespace binetkit;

namespace {

template <class T>
void check_sides(const SidePair<T>& sides, const T& lhs, const T& rhs)
{
    CHECK(sides.lhs == lhs);
    CHECK(sides.rhs == rhs);
    CHECK(sides.equal == (lhs == rhs));
}

void check_value(const SidePair<Rational>& sides, const Rational& value)
{
    check_sides(sides, value, value);
}

}  // namespace

TEST_CASE("reciprocal binomial sum")
{
    check_value(eq1_sides(0), 1);
    check_value(eq1_sides(1), 2);
    check_value(eq1_sides(2), Rational(5, 2));
    const Rational expected[] = {1, 2, Rational(5, 2), Rational(8, 3), Rational(8, 3), Rational(13, 5), Rational(151, 60),
                                 Rational(256, 105)};
    for (long n = 0; n < 8; ++n) {
        check_value(eq1_sides(n), expected[n]);
    }
    CHECK_THROWS_AS(eq1_sides(-1), std::domain_error);
}

TEST_CASE("Gould's generating identity over Q")
{
    check_value(gould_check(Rational(2), 2), 6);
    for (long n = 1; n <= 6; ++n) {
        check_value(gould_check(Rational(0), n), 1);
    }
    check_value(gould_check(Rational(3, 7), 5), Rational(19045, 16807));
    check_value(gould_check(Rational(-5, 2), 4), Rational(3511, 96));
    CHECK_THROWS_AS(gould_check(Rational(-1), 3), std::domain_error);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    std::uniform_int_distribution<long> order(0, 25);
    int checked = 0;
    while (checked < 200) {
        const Rational z = make_rational(num(rng), den(rng));
        if (z == -1) {
            continue;
        }
        const auto sides = gould_check(z, order(rng));
        CHECK(sides.equal);
        ++checked;
    }
}

TEST_CASE("Gould's generating identity in quadratic fields")
{
    const QuadElement alpha = golden_alpha();
    const QuadElement beta = golden_beta();
    const auto pell = roots_of(2, -1);
    const QuadElement points[] = {alpha,
                                  beta,
                                  alpha / Rational(2),
                                  -beta / Rational(2),
                                  pow(alpha, 3),
                                  -pow(alpha, 3),
                                  pow(alpha, 2) / pow(beta, 2),
                                  pow(pell.tau, 2) / pow(pell.sigma, 2)};
    for (const auto& z : points) {
        for (long n = 0; n <= 15; ++n) {
            CAPTURE(n);
            CHECK(gould_check(z, n).equal);
        }
    }
    CHECK_THROWS_AS(gould_check(QuadElement(-1, 5), 2), std::domain_error);
}

TEST_CASE("shifted Fibonacci/Lucas sums")
{
    check_value(thm1_sides(1, 0, SeqKind::F), 2);
    check_value(thm1_sides(0, 0, SeqKind::L), 2);
    check_value(thm1_sides(3, -4, SeqKind::F), Rational(7, 3));
    check_value(thm1_sides(5, 7, SeqKind::L), Rational(46593, 10));
}

TEST_CASE("halved golden-ratio sums")
{
    check_value(thm2_sides(0, 1, SeqKind::F), Rational(1, 2));
    check_value(thm2_sides(0, 0, SeqKind::L), 1);
    check_value(thm2_sides(2, 3, SeqKind::L), Rational(185, 48));
    check_value(thm2_sides(3, -4, SeqKind::F), Rational(-271, 192));

    // The 2^{j+s} weight agrees with the right side only when s = 1.
    CHECK(thm2_sides(2, 1, SeqKind::F, HalvedWeight::printed).equal);
    CHECK_FALSE(thm2_sides(1, 0, SeqKind::F, HalvedWeight::printed).equal);
    CHECK_FALSE(thm2_sides(2, 3, SeqKind::L, HalvedWeight::printed).equal);
}

TEST_CASE("r-step sums with L_r denominators")
{
    check_value(thm3_sides(1, 1, 0, SeqKind::F), -1);
    check_value(thm3_sides(2, 0, 0, SeqKind::L), 5);
    check_value(thm3_sides(4, -2, 3, SeqKind::L), Rational(-6457, 12));
    check_value(thm3_sides(3, 2, -5, SeqKind::F), 19);
}

TEST_CASE("r = 0 collapses to L_s times the reciprocal binomial sum")
{
    for (long s = -10; s <= 10; ++s) {
        for (long n = 0; n <= 15; ++n) {
            const auto base = eq1_sides(n);
            const auto sides = thm3_sides(n, 0, s, SeqKind::L);
            const Rational ls(lucas(s));
            CHECK(sides.lhs == ls * base.lhs);
            CHECK(sides.rhs == ls * base.rhs);
        }
    }
}

TEST_CASE("Horadam sums")
{
    check_value(horadam_sides(1, 1, 0, fibonacci_params()), -1);
    check_value(horadam_sides(0, 3, -2, {2, 2, 3, 2}), horadam(-2, {2, 2, 3, 2}));
    check_value(horadam_sides(2, 1, 1, {0, 1, 2, -1}), Rational(55, 2));
    check_value(horadam_sides(3, -2, 4, {1, 3, 3, 1}), Rational(-973, 3));
    check_value(horadam_sides(4, 3, -5, {0, 1, 1, -2}), Rational(513119, 12288));

    for (long n = 0; n <= 6; ++n) {
        for (long r = -3; r <= 3; ++r) {
            for (long s = -4; s <= 4; ++s) {
                CHECK(horadam_sides(n, r, s, fibonacci_params()).lhs == thm3_sides(n, r, s, SeqKind::F).lhs);
                CHECK(horadam_sides(n, r, s, lucas_params()).rhs == thm3_sides(n, r, s, SeqKind::L).rhs);
            }
        }
    }

    CHECK_THROWS_AS(horadam_sides(2, 1, 0, {0, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(horadam_sides(2, 1, 0, {0, 1, 2, 1}), std::domain_error);
    // With real distinct roots v_r = tau^r + sigma^r vanishes only if tau = -sigma, i.e. p = 0.
    CHECK_THROWS_AS(horadam_sides(1, 1, 0, {0, 1, 0, -1}), std::domain_error);
    check_value(horadam_sides(1, 2, 0, {0, 1, 0, -1}), 0);
}

TEST_CASE("cubic-step sums")
{
    check_value(thm4_sides(1, 0, AltVariant::plain, SeqKind::F), 2);
    check_value(thm4_sides(0, 0, AltVariant::alternating, SeqKind::L), 2);
    check_value(thm4_sides(3, 2, AltVariant::plain, SeqKind::L), Rational(152, 3));
    check_value(thm4_sides(4, -3, AltVariant::alternating, SeqKind::F), Rational(289, 3));
}

TEST_CASE("grid equality on a reduced grid")
{
    for (long n = 0; n <= 10; ++n) {
        for (long s = -12; s <= 12; ++s) {
            for (const SeqKind kind : {SeqKind::F, SeqKind::L}) {
                CHECK(thm1_sides(n, s, kind).equal);
                CHECK(thm2_sides(n, s, kind).equal);
                CHECK(thm4_sides(n, s, AltVariant::plain, kind).equal);
                CHECK(thm4_sides(n, s, AltVariant::alternating, kind).equal);
                for (long r = -4; r <= 4; ++r) {
                    CHECK(thm3_sides(n, r, s, kind).equal);
                }
            }
        }
    }
}

TEST_CASE("negative order is rejected")
{
    CHECK_THROWS_AS(thm1_sides(-1, 0, SeqKind::F), std::domain_error);
    CHECK_THROWS_AS(thm4_sides(-2, 0, AltVariant::plain, SeqKind::L), std::domain_error);
}
