#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binetkit/bigseq.hpp"
#include "binetkit/quadfield.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

using namespace binetkit;

namespace {

const QuadElement alpha = golden_alpha();
const QuadElement beta = golden_beta();
const QuadElement root5 = sqrt_of(5);

QuadElement q5(const Integer& x) { return QuadElement(Rational(x), 5); }

}  // namespace

TEST_CASE("roots of x^2 - p x + q")
{
    const auto golden = roots_of(1, -1);
    CHECK(golden.tau == QuadElement(Rational(1, 2), Rational(1, 2), 5));
    CHECK(golden.sigma == QuadElement(Rational(1, 2), Rational(-1, 2), 5));

    const auto pell = roots_of(2, -1);
    CHECK(pell.tau == QuadElement(1, Rational(1, 2), 8));
    CHECK(pell.sigma == QuadElement(1, Rational(-1, 2), 8));

    for (const auto& [p, q] : {std::pair<Rational, Rational>{1, -1}, {2, -1}, {3, 1}, {Rational(5, 2), Rational(1, 3)},
                               {3, 2}, {-4, Rational(-7, 5)}}) {
        const auto rp = roots_of(p, q);
        const Rational d = p * p - 4 * q;
        CHECK(rp.tau * rp.sigma == QuadElement(q, d));
        CHECK(rp.tau + rp.sigma == QuadElement(p, d));
        CHECK(rp.tau - rp.sigma == sqrt_of(d));
    }
    CHECK_THROWS_AS(roots_of(2, 1), std::domain_error);
    CHECK_THROWS_AS(roots_of(1, 1), std::domain_error);
}

TEST_CASE("field operations on alpha and beta")
{
    CHECK(q_arith(alpha, beta, QuadOp::mul) == QuadElement(-1, 5));
    CHECK(q_arith(alpha, beta, QuadOp::add) == QuadElement(1, 5));
    CHECK(q_arith(alpha, beta, QuadOp::sub) == QuadElement(0, 1, 5));
    CHECK(q_arith(alpha, beta, QuadOp::conj) == beta);
    CHECK(q_arith(alpha, beta, QuadOp::div) == -alpha * alpha);
    CHECK(alpha.norm() == -1);
    CHECK_THROWS_AS(q_arith(alpha, QuadElement(0, 5), QuadOp::div), std::domain_error);
}

TEST_CASE("powers of alpha")
{
    CHECK(pow(alpha, 2) == QuadElement(Rational(3, 2), Rational(1, 2), 5));
    CHECK(pow(alpha, 10) == QuadElement(Rational(123, 2), Rational(55, 2), 5));
    CHECK(pow(alpha, -1) == -beta);
    CHECK(pow(alpha, 0) == QuadElement(1, 5));
    for (long j = -100; j <= 100; ++j) {
        CHECK(pow(alpha, j) == QuadElement(Rational(lucas(j), 2), Rational(fibonacci(j), 2), 5));
    }
    CHECK_THROWS_AS(pow(QuadElement(0, 5), -2), std::domain_error);
}

TEST_CASE("mixed radicands are rejected")
{
    CHECK_THROWS_AS(alpha + sqrt_of(2), std::invalid_argument);
    CHECK_THROWS_AS(alpha * sqrt_of(3), std::invalid_argument);
}

TEST_CASE("square radicands fold into the rational part")
{
    const QuadElement x(1, 3, 4);
    CHECK(x.is_rational());
    CHECK(x.a() == 7);
    CHECK(QuadElement(0, 2, Rational(9, 4)) == QuadElement(3, Rational(9, 4)));
    const auto rp = roots_of(3, 2);
    CHECK(rp.tau == QuadElement(2, 1));
    CHECK(rp.sigma == QuadElement(1, 1));
}

TEST_CASE("rendering")
{
    CHECK(to_string(alpha) == "1/2 + 1/2*sqrt(5)");
    CHECK(to_string(beta) == "1/2 - 1/2*sqrt(5)");
    std::ostringstream os;
    os << QuadElement(3, 5);
    CHECK(os.str() == "3");
}

TEST_CASE("3 alpha^r -+ beta^(r+3) reductions")
{
    for (long r = -30; r <= 30; ++r) {
        CHECK(3 * pow(alpha, r) - pow(beta, r + 3) == q5(lucas(r + 1)) * root5 - q5(lucas(r - 1)));
        CHECK(3 * pow(alpha, r) + pow(beta, r + 3) == root5 * (q5(fibonacci(r + 1)) * root5 - q5(fibonacci(r - 1))));
    }
}

TEST_CASE("alpha^r -+ beta^(r+6) reductions")
{
    const QuadElement beta3 = pow(beta, 3);
    for (long r = -30; r <= 30; ++r) {
        CHECK(pow(alpha, r) - pow(beta, r + 6) == -beta3 * q5(lucas(r + 3)));
        CHECK(pow(alpha, r) + pow(beta, r + 6) == -beta3 * q5(fibonacci(r + 3)) * root5);
    }
}

TEST_CASE("f/g decomposition over alpha^s and beta^s")
{
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational f = make_rational(num(rng), den(rng));
        const Rational g = make_rational(num(rng), den(rng));
        for (long s = -20; s <= 20; ++s) {
            const QuadElement lhs = pow(alpha, s) * f + pow(beta, s) * g;
            const QuadElement rhs = QuadElement(Rational(lucas(s), 2) * (f + g), 5)
                                    + q5(fibonacci(s)) * root5 * Rational((f - g) / 2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cubic reductions")
{
    const QuadElement a3 = pow(alpha, 3);
    const QuadElement b3 = pow(beta, 3);
    CHECK(2 * a3 + Rational(1) == a3 * root5);
    CHECK(2 * b3 + Rational(1) == -b3 * root5);
}

TEST_CASE("shift coefficients of the golden-ratio series")
{
    // L-case: the s-shifted coefficient factors through the s = 0 coefficient sqrt5 + 1.
    const QuadElement base = root5 + Rational(1);
    for (long s = -20; s <= 20; ++s) {
        const QuadElement shifted = q5(lucas(s + 1)) * root5 - q5(lucas(s - 1));
        const QuadElement factor = (Rational(5) * beta * Rational(fibonacci(s)) + q5(2 * lucas(s + 1))) / Rational(2);
        CHECK(shifted == factor * base);
    }
}
