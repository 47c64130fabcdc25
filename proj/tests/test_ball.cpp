#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binetkit/ball.hpp"
#include "binetkit/bigseq.hpp"

#include <functional>
#include <random>
#include <vector>

using namespace binetkit;

namespace {

struct Interval {
    Rational lo;
    Rational hi;
};

// arctan(1/k) bracketed by consecutive partial sums of its alternating series.
Interval atan_inverse(long k, int terms)
{
    const Rational x(1, k);
    Rational sum = 0;
    Rational power = x;
    for (int i = 0; i < terms; ++i) {
        sum += Rational(minus_one_pow(i)) * power / (2 * i + 1);
        power *= x * x;
    }
    const Rational next = power / (2 * terms + 1);
    return terms % 2 == 0 ? Interval{sum, sum + next} : Interval{sum - next, sum};
}

// pi = 16 arctan(1/5) - 4 arctan(1/239), in exact rationals.
Interval machin_pi(int terms)
{
    const Interval a = atan_inverse(5, terms);
    const Interval b = atan_inverse(239, terms);
    return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

bool meets(const Ball& x, const Interval& iv) { return x.lower_q() <= iv.hi && x.upper_q() >= iv.lo; }

Rational two_pow(long e) { return pow(Rational(2), e); }

const QuadElement alpha = golden_alpha();
const QuadElement beta = golden_beta();

}  // namespace

TEST_CASE("rational embedding")
{
    const Ball third = ball_from_rational(Rational(1, 3), 64);
    CHECK(third.contains(Rational(1, 3)));
    CHECK(third.rad_q() <= two_pow(1 - 64) * Rational(1, 3));

    const Ball zero = ball_from_rational(0, 64);
    CHECK(zero.is_exact());
    CHECK(zero.mid_q() == 0);

    const Ball big = ball_from_rational(184756, 64);
    CHECK(big.is_exact());
    CHECK(big.contains(184756));

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        const Rational x = make_rational(num(rng), den(rng));
        for (long prec : {16L, 53L, 128L}) {
            const Ball b = ball_from_rational(x, prec);
            CHECK(b.contains(x));
            CHECK(b.rad_q() <= two_pow(1 - prec) * abs(x));
        }
    }
}

TEST_CASE("quadratic embedding")
{
    const Ball a = ball_from_quad(alpha, 128);
    CHECK(a.lower_q() > parse_rational("16180339887/10000000000"));
    CHECK(a.upper_q() < parse_rational("16180339888/10000000000"));
    const Ball b = ball_from_quad(beta, 128);
    CHECK(b.lower_q() > parse_rational("-6180339888/10000000000"));
    CHECK(b.upper_q() < parse_rational("-6180339887/10000000000"));
    // alpha * beta = -1 and alpha + beta = 1
    CHECK((a * b).contains(-1));
    CHECK((a + b).contains(1));
    CHECK(ball_from_quad(QuadElement(Rational(7, 3), 5), 64).mid_q() == ball_from_rational(Rational(7, 3), 64).mid_q());
    // sqrt 5 bracketed through its square
    const Ball r5 = ball_from_quad(sqrt_of(5), 200);
    CHECK(r5.lower_q() * r5.lower_q() <= 5);
    CHECK(r5.upper_q() * r5.upper_q() >= 5);
}

TEST_CASE("pi against a Machin oracle")
{
    for (long prec : {64L, 128L, 256L, 512L}) {
        const Ball pi = const_pi(prec);
        CHECK(pi.rad_q() <= two_pow(4 - prec));
        CHECK(meets(pi, machin_pi(static_cast<int>(prec / 2))));
    }
    CHECK(const_pi(64).overlaps(const_pi(128)));
    CHECK((4 * atan(ball_from_rational(1, 128))).overlaps(const_pi(128)));
}

TEST_CASE("elementary identity cases")
{
    CHECK(atan(ball_from_rational(1, 128)).overlaps(const_pi(128) / Rational(4)));
    CHECK(log(ball_from_rational(1, 128)).contains(0));
    CHECK(elem_fn(ElemFn::sqrt, ball_from_rational(Rational(9, 4), 64)).contains(Rational(3, 2)));
    CHECK(elem_fn(ElemFn::arcsin, ball_from_rational(Rational(1, 2), 128)).overlaps(const_pi(128) / Rational(6)));
    const Ball s = asin(ball_from_quad(alpha / Rational(2), 128));
    CHECK(s.overlaps(const_pi(128) * Rational(3, 10)));
    CHECK(elem_fn(ElemFn::log, ball_from_rational(8, 128)).overlaps(3 * log(ball_from_rational(2, 128))));
}

TEST_CASE("arithmetic contains the exact result")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 99991);
    for (int i = 0; i < 300; ++i) {
        const Rational x = make_rational(num(rng), den(rng));
        const Rational y = make_rational(num(rng), den(rng));
        const long prec = 24 + (i % 5) * 40;
        const Ball bx = ball_from_rational(x, prec);
        const Ball by = ball_from_rational(y, prec);
        CHECK((bx + by).contains(x + y));
        CHECK((bx - by).contains(x - y));
        CHECK((bx * by).contains(x * y));
        if (y != 0) {
            CHECK((bx / by).contains(x / y));
        }
        CHECK(pow(bx, 5).contains(x * x * x * x * x));
        CHECK((-bx).contains(-x));
    }
}

TEST_CASE("refinement keeps enclosures overlapping")
{
    const std::vector<std::function<Ball(long)>> ops = {
        [](long p) { return const_pi(p); },
        [](long p) { return sqrt(ball_from_rational(5, p)); },
        [](long p) { return log(ball_from_quad(alpha, p)); },
        [](long p) { return asin(ball_from_rational(Rational(1, 3), p)); },
        [](long p) { return atan(ball_from_rational(Rational(7, 2), p)); },
        [](long p) { return acos(ball_from_quad(-beta / Rational(2), p)); },
        [](long p) { return cot(const_pi(p) / Rational(5)); },
        [](long p) { return ball_from_rational(Rational(1, 7), p) / ball_from_quad(alpha, p); },
        [](long p) { return pow(ball_from_quad(alpha, p), 40) - ball_from_quad(pow(alpha, 40), p); },
    };
    for (long prec : {32L, 64L, 128L, 256L, 1024L}) {
        for (const auto& op : ops) {
            const Ball lo = op(prec);
            const Ball hi = op(2 * prec);
            CHECK(lo.overlaps(hi));
            CHECK(hi.rad_q() <= lo.rad_q());
        }
    }
}

TEST_CASE("golden-ratio angle values")
{
    const long prec = 128;
    const Ball pi = const_pi(prec);
    CHECK(acos(ball_from_quad(alpha / Rational(2), prec)).overlaps(pi / Rational(5)));
    CHECK(acos(ball_from_quad(-beta / Rational(2), prec)).overlaps(pi * Rational(2, 5)));
    const Ball beta3 = ball_from_quad(pow(beta, 3), prec);
    const Ball cot_2pi5 = cot(pi * Rational(2, 5));
    CHECK(cot_2pi5.overlaps(-beta3 * cot(pi / Rational(5))));
    const Ball root = sqrt(ball_from_quad(pow(alpha, 3), prec) / sqrt(ball_from_rational(5, prec)));
    CHECK(cot_2pi5.overlaps(-beta3 * root));
}

TEST_CASE("arctangent sum and difference over golden powers")
{
    const long prec = 128;
    const Ball half_pi = const_pi(prec) / Rational(2);
    for (long r = -5; r <= 5; ++r) {
        const Ball a = atan(ball_from_quad(pow(alpha, 2 * r), prec));
        const Ball b = atan(ball_from_quad(pow(beta, 2 * r), prec));
        CHECK((a + b).overlaps(half_pi));
        const Ball target = atan(ball_from_quad(QuadElement(0, Rational(fibonacci(2 * r), 2), 5), prec));
        CHECK((a - b).overlaps(target));
    }
}

TEST_CASE("domain errors are distinct from precision errors")
{
    CHECK_THROWS_AS(sqrt(ball_from_rational(-1, 64)), DomainError);
    CHECK_THROWS_AS(log(ball_from_rational(0, 64)), DomainError);
    CHECK_THROWS_AS(asin(ball_from_rational(2, 64)), DomainError);
    CHECK_THROWS_AS(ball_from_rational(1, 64) / ball_from_rational(0, 64), DomainError);
    CHECK_THROWS_AS(cot(ball_from_rational(-1, 64)), DomainError);

    Ball fuzzy = ball_from_rational(0, 64);
    fuzzy.add_error(Rational(1, 1000));
    CHECK_THROWS_AS(sqrt(fuzzy), PrecisionError);
    CHECK_THROWS_AS(log(fuzzy), PrecisionError);
    CHECK_THROWS_AS(ball_from_rational(1, 64) / fuzzy, PrecisionError);
    CHECK_THROWS_AS(cot(fuzzy), PrecisionError);
    Ball edge = ball_from_rational(1, 64);
    edge.add_error(Rational(1, 1000));
    CHECK_THROWS_AS(asin(edge), PrecisionError);

    CHECK_THROWS_AS(Ball(8), std::invalid_argument);
}

TEST_CASE("ball comparison")
{
    const Ball pi = const_pi(256);
    CHECK(ball_compare(pi, pi, Rational(1, 1000000)) == Comparison::overlap_within_tol);

    const Ball pi2 = pi * pi;
    const Ball a = pi2 / Rational(5);
    const Ball b = pi2 * pi2 * Rational(41, 4100);
    CHECK(a.rad_q() <= parse_rational("1e-10"));
    CHECK(b.rad_q() <= parse_rational("1e-10"));
    CHECK(ball_compare(a, b, Rational(1, 1000000)) == Comparison::disjoint_beyond_tol);

    Ball wide = ball_from_rational(1, 64);
    wide.add_error(Rational(1, 100));
    CHECK(ball_compare(wide, ball_from_rational(1, 64), Rational(1, 1000)) == Comparison::inconclusive);
    CHECK_THROWS_AS(ball_compare(pi, pi, 0), std::invalid_argument);
    CHECK(to_string(Comparison::disjoint_beyond_tol) == "disjoint_beyond_tol");
}

TEST_CASE("decimal rendering")
{
    CHECK(mid_string(ball_from_rational(Rational(1, 4), 16)) == "2.50000e-01");
    CHECK(upper_decimal(Rational(1, 3), 3) == "3.334e-01");
    const std::string text = to_string(const_pi(64));
    CHECK(text.rfind("3.14159265358979323", 0) == 0);
    CHECK(text.find(" +/- ") != std::string::npos);
}
