#pragma once

// Fibonacci, Lucas, Horadam and Lucas u/v sequences over exact integers and
// rationals, extended to negative indices.

#include "binetkit/number.hpp"

#include <utility>
#include <vector>

namespace binetkit {

/// Seeds and recurrence coefficients of w_j = p w_{j-1} - q w_{j-2}, w_0 = a, w_1 = b.
struct HoradamParams {
    Rational a;
    Rational b;
    Rational p;
    Rational q;

    /// Throws std::invalid_argument unless p != 0 and q != 0.
    void validate() const;
    /// p^2 - 4q; the Binet form needs this to be positive.
    Rational discriminant() const { return p * p - 4 * q; }

    bool operator==(const HoradamParams&) const = default;
};

/// Fibonacci specialization (0, 1; 1, -1).
HoradamParams fibonacci_params();
/// Lucas specialization (2, 1; 1, -1).
HoradamParams lucas_params();

Integer fibonacci(long j);
Integer lucas(long j);

/// Both F_j and L_j from a single fast-doubling pass.
std::pair<Integer, Integer> fibonacci_lucas(long j);

/// w_j; negative j uses the backward recurrence w_{j-2} = (p w_{j-1} - w_j) / q.
Rational horadam(long j, const HoradamParams& params);

struct LucasPair {
    Rational u;
    Rational v;
};

/// u_j(p, q) = w_j(0, 1; p, q) and v_j(p, q) = w_j(2, p; p, q).
LucasPair lucas_uv(long j, const Rational& p, const Rational& q);

/// Horadam values tabulated on a contiguous window of indices.
///
/// The table is filled once at construction and is immutable afterwards, so
/// a single instance can be shared between threads.
class HoradamTable {
public:
    HoradamTable(HoradamParams params, long lo, long hi);

    const HoradamParams& params() const { return params_; }
    long lo() const { return lo_; }
    long hi() const { return hi_; }
    bool covers(long j) const { return j >= lo_ && j <= hi_; }

    /// Throws std::out_of_range outside [lo, hi].
    const Rational& operator[](long j) const;

private:
    HoradamParams params_;
    long lo_;
    long hi_;
    std::vector<Rational> values_;
};

}  // namespace binetkit
