#include "binetkit/bigseq.hpp"

#include <stdexcept>
#include <string>

namespace binetkit {

void HoradamParams::validate() const
{
    if (q == 0) {
        throw std::invalid_argument("Horadam parameter q must be nonzero");
    }
    if (p == 0) {
        throw std::invalid_argument("Horadam parameter p must be nonzero");
    }
}

HoradamParams fibonacci_params() { return {0, 1, 1, -1}; }
HoradamParams lucas_params() { return {2, 1, 1, -1}; }

namespace {

// (F_k, F_{k+1}) for k >= 0 by fast doubling:
//   F_{2k} = F_k (2 F_{k+1} - F_k),  F_{2k+1} = F_k^2 + F_{k+1}^2.
std::pair<Integer, Integer> fib_pair(unsigned long k)
{
    Integer a = 0;
    Integer b = 1;
    int bit = 0;
    for (unsigned long t = k; t != 0; t >>= 1) {
        ++bit;
    }
    for (int i = bit - 1; i >= 0; --i) {
        Integer c = a * (2 * b - a);
        Integer d = a * a + b * b;
        if ((k >> i) & 1UL) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return {a, b};
}

unsigned long magnitude(long j)
{
    return j < 0 ? static_cast<unsigned long>(-(j + 1)) + 1 : static_cast<unsigned long>(j);
}

}  // namespace

std::pair<Integer, Integer> fibonacci_lucas(long j)
{
    const unsigned long k = magnitude(j);
    auto [f, f1] = fib_pair(k);
    Integer l = 2 * f1 - f;
    if (j < 0) {
        // F_{-k} = (-1)^{k-1} F_k,  L_{-k} = (-1)^k L_k
        if (k % 2 == 0) {
            f = -f;
        } else {
            l = -l;
        }
    }
    return {f, l};
}

Integer fibonacci(long j) { return fibonacci_lucas(j).first; }
Integer lucas(long j) { return fibonacci_lucas(j).second; }

Rational horadam(long j, const HoradamParams& params)
{
    if (params.q == 0) {
        throw std::invalid_argument("Horadam parameter q must be nonzero");
    }
    Rational prev = params.a;
    Rational cur = params.b;
    if (j == 0) {
        return prev;
    }
    if (j > 0) {
        for (long i = 1; i < j; ++i) {
            Rational next = params.p * cur - params.q * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // Walk down: (w_1, w_0) -> (w_0, w_{-1}) -> ...
    Rational hi = params.b;
    Rational lo = params.a;
    for (long i = 0; i > j; --i) {
        Rational below = (params.p * lo - hi) / params.q;
        hi = std::move(lo);
        lo = std::move(below);
    }
    return lo;
}

LucasPair lucas_uv(long j, const Rational& p, const Rational& q)
{
    if (q == 0) {
        throw std::invalid_argument("Lucas sequence parameter q must be nonzero");
    }
    return {horadam(j, {0, 1, p, q}), horadam(j, {2, p, p, q})};
}

HoradamTable::HoradamTable(HoradamParams params, long lo, long hi)
    : params_(std::move(params)), lo_(lo), hi_(hi)
{
    if (params_.q == 0) {
        throw std::invalid_argument("Horadam parameter q must be nonzero");
    }
    if (lo > 0 || hi < 1) {
        throw std::invalid_argument("HoradamTable window must contain indices 0 and 1");
    }
    values_.resize(static_cast<std::size_t>(hi - lo + 1));
    const auto at = [this](long j) -> Rational& { return values_[static_cast<std::size_t>(j - lo_)]; };
    at(0) = params_.a;
    at(1) = params_.b;
    for (long j = 2; j <= hi; ++j) {
        at(j) = params_.p * at(j - 1) - params_.q * at(j - 2);
    }
    for (long j = -1; j >= lo; --j) {
        at(j) = (params_.p * at(j + 1) - at(j + 2)) / params_.q;
    }
}

const Rational& HoradamTable::operator[](long j) const
{
    if (!covers(j)) {
        throw std::out_of_range("Horadam index " + std::to_string(j) + " outside tabulated window");
    }
    return values_[static_cast<std::size_t>(j - lo_)];
}

}  // namespace binetkit
