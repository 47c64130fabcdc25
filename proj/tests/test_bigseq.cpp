#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binetkit/bigseq.hpp"
#include "binetkit/quadfield.hpp"

#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

using namespace binetkit;

namespace {

// Oracle: plain forward/backward recurrence, independent of fast doubling.
std::map<long, Integer> iterate(Integer x0, Integer x1, long reach)
{
    std::map<long, Integer> out{{0, x0}, {1, x1}};
    for (long j = 2; j <= reach; ++j) {
        out[j] = out[j - 1] + out[j - 2];
    }
    for (long j = -1; j >= -reach; --j) {
        out[j] = out[j + 2] - out[j + 1];
    }
    return out;
}

}  // namespace

TEST_CASE("fibonacci examples")
{
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(-5) == 5);
    CHECK(fibonacci(-6) == -8);
    CHECK(fibonacci(300) == Integer("222232244629420445529739893461909967206666939096499764990979600"));
    CHECK(fibonacci(-200) == Integer("-280571172992510140037611932413038677189525"));
}

TEST_CASE("lucas examples")
{
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(10) == 123);
    CHECK(lucas(-3) == -4);
    CHECK(lucas(150) == Integer("22291846172619859445381409012498"));
}

TEST_CASE("fibonacci and lucas match the recurrence on [-200, 200]")
{
    const auto fib = iterate(0, 1, 202);
    const auto luc = iterate(2, 1, 202);
    for (long j = -200; j <= 200; ++j) {
        CAPTURE(j);
        REQUIRE(fibonacci(j) == fib.at(j));
        REQUIRE(lucas(j) == luc.at(j));
        CHECK(fibonacci(j + 2) == fibonacci(j + 1) + fibonacci(j));
        CHECK(lucas(j + 2) == lucas(j + 1) + lucas(j));
        const int sign_f = (j - 1) % 2 == 0 ? 1 : -1;
        const int sign_l = j % 2 == 0 ? 1 : -1;
        CHECK(fibonacci(-j) == sign_f * fibonacci(j));
        CHECK(lucas(-j) == sign_l * lucas(j));
    }
}

TEST_CASE("horadam specializations")
{
    CHECK(horadam(5, {0, 1, 1, -1}) == 5);
    CHECK(horadam(4, {2, 1, 1, -1}) == 7);
    const HoradamParams odd{Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(-5, 7)};
    CHECK(horadam(0, odd) == Rational(1, 2));
    CHECK(horadam(6, odd) == Rational(107687, 43904));
    CHECK(horadam(-3, {1, 3, 3, 1}) == -3);
    CHECK(horadam(-4, {0, 1, 1, -2}) == Rational(-5, 16));
    for (long j = 0; j <= 100; ++j) {
        CHECK(horadam(j, fibonacci_params()) == Rational(fibonacci(j)));
        CHECK(horadam(j, lucas_params()) == Rational(lucas(j)));
    }
    for (long j = -60; j < 0; ++j) {
        CHECK(horadam(j, fibonacci_params()) == Rational(fibonacci(j)));
    }
}

TEST_CASE("horadam rejects q = 0")
{
    CHECK_THROWS_AS(horadam(3, {0, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(lucas_uv(3, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(HoradamParams({0, 1, 0, 1}).validate(), std::invalid_argument);
}

TEST_CASE("lucas u/v sequences")
{
    CHECK(lucas_uv(5, 2, -1).u == 29);
    CHECK(lucas_uv(3, 1, -2).u == 3);
    const auto zero = lucas_uv(0, 7, 3);
    CHECK(zero.u == 0);
    CHECK(zero.v == 2);
    CHECK(lucas_uv(10, 1, -1).v == Rational(lucas(10)));
}

TEST_CASE("tabulated horadam agrees with direct evaluation")
{
    const HoradamParams params{1, 3, 3, 1};
    const HoradamTable table(params, -40, 40);
    for (long j = -40; j <= 40; ++j) {
        CHECK(table[j] == horadam(j, params));
    }
    CHECK_THROWS_AS(table[41], std::out_of_range);
}

TEST_CASE("Binet forms in Q(sqrt 5) reproduce F and L for |j| <= 100")
{
    const QuadElement alpha = golden_alpha();
    const QuadElement beta = golden_beta();
    const QuadElement diff = alpha - beta;
    for (long j = -100; j <= 100; ++j) {
        const QuadElement aj = pow(alpha, j);
        const QuadElement bj = pow(beta, j);
        CHECK((aj - bj) / diff == QuadElement(Rational(fibonacci(j)), 5));
        CHECK(aj + bj == QuadElement(Rational(lucas(j)), 5));
    }
}

TEST_CASE("Horadam Binet coefficients reproduce w_j")
{
    for (const HoradamParams& params : {HoradamParams{0, 1, 2, -1}, HoradamParams{1, 3, 3, 1},
                                        HoradamParams{Rational(1, 2), -2, Rational(5, 2), Rational(1, 3)}}) {
        const auto bc = binet_coefficients(params);
        for (long j = -15; j <= 15; ++j) {
            const QuadElement w = bc.A * pow(bc.roots.tau, j) + bc.B * pow(bc.roots.sigma, j);
            CHECK(w == QuadElement(horadam(j, params), params.discriminant()));
        }
    }
}

TEST_CASE("concurrent evaluation is deterministic")
{
    std::vector<Integer> results(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < results.size(); ++t) {
        threads.emplace_back([&results, t] {
            Integer acc = 0;
            for (long j = -300; j <= 300; ++j) {
                acc += fibonacci(j) * lucas(j);
            }
            results[t] = acc;
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (const auto& r : results) {
        CHECK(r == results.front());
    }
}
