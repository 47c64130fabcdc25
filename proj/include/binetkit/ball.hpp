#pragma once

// Midpoint-radius ball arithmetic over MPFR.
//
// Every operation returns a ball that contains the exact result whenever the
// inputs contain their true values. Midpoints are rounded to nearest at the
// working precision and the rounding error is folded into the radius; radii
// are kept at a short fixed precision and always rounded up.

#include "binetkit/number.hpp"
#include "binetkit/quadfield.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace binetkit {

constexpr long default_precision = 256;
constexpr long min_precision = 16;
constexpr long max_precision = 1L << 20;

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The ball straddles a domain boundary; more precision may resolve it.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Owning wrapper around mpfr_t.
class MpfrValue {
public:
    explicit MpfrValue(long prec);
    MpfrValue(const MpfrValue& other);
    MpfrValue(MpfrValue&& other) noexcept;
    MpfrValue& operator=(const MpfrValue& other);
    MpfrValue& operator=(MpfrValue&& other) noexcept;
    ~MpfrValue();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

private:
    mpfr_t value_;
};

}  // namespace detail

class Ball {
public:
    /// Exact zero at the default precision.
    Ball() : Ball(default_precision) {}
    /// Exact zero at `prec` bits.
    explicit Ball(long prec);

    long precision() const { return prec_; }

    mpfr_srcptr mid() const { return mid_.get(); }
    mpfr_srcptr rad() const { return rad_.get(); }

    /// Exact dyadic values of the midpoint, radius and endpoints.
    Rational mid_q() const;
    Rational rad_q() const;
    Rational lower_q() const;
    Rational upper_q() const;

    bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
    bool contains(const Rational& x) const;
    bool contains_zero() const { return contains(Rational(0)); }
    bool overlaps(const Ball& other) const;
    /// Entirely > 0 / < 0.
    bool is_positive() const;
    bool is_negative() const;

    /// Raw construction from a midpoint and a non-negative radius bound.
    static Ball from_mid_rad(mpfr_srcptr mid, mpfr_srcptr rad, long prec);
    /// Ball [lower, upper]; requires lower <= upper.
    static Ball from_endpoints(mpfr_srcptr lower, mpfr_srcptr upper, long prec);

    /// Widens the radius by a non-negative rational amount (rounded up).
    Ball& add_error(const Rational& err);

    Ball& operator+=(const Ball& y);
    Ball& operator-=(const Ball& y);
    Ball& operator*=(const Ball& y);
    Ball& operator/=(const Ball& y);
    Ball operator-() const;

private:
    friend class BallAccess;
    detail::MpfrValue mid_;
    detail::MpfrValue rad_;
    long prec_;
};

Ball operator+(Ball x, const Ball& y);
Ball operator-(Ball x, const Ball& y);
Ball operator*(Ball x, const Ball& y);
Ball operator/(Ball x, const Ball& y);
Ball operator*(Ball x, const Rational& y);
Ball operator*(const Rational& x, Ball y);
Ball operator/(Ball x, const Rational& y);
Ball operator+(Ball x, const Rational& y);
Ball operator-(Ball x, const Rational& y);

/// Ball containing x with radius at most 2^{1-prec} |x| (zero if x is representable).
Ball ball_from_rational(const Rational& x, long prec);
Ball ball_from_integer(const Integer& x, long prec);
/// Ball containing a + b sqrt(D), positive root.
Ball ball_from_quad(const QuadElement& x, long prec);

/// pi with radius at most 2^{4-prec}.
Ball const_pi(long prec);

Ball sqrt(const Ball& x);
Ball log(const Ball& x);
Ball asin(const Ball& x);
Ball atan(const Ball& x);
/// pi/2 - asin(x).
Ball acos(const Ball& x);
/// cot over (0, pi), where it is strictly decreasing.
Ball cot(const Ball& x);
Ball abs(const Ball& x);
Ball pow(const Ball& x, unsigned long k);

enum class ElemFn { sqrt, log, arcsin, arctan };

Ball elem_fn(ElemFn f, const Ball& x);

enum class Comparison { overlap_within_tol, disjoint_beyond_tol, inconclusive };

/// disjoint_beyond_tol  iff |a.mid - b.mid| > a.rad + b.rad + tol,
/// overlap_within_tol   iff |a.mid - b.mid| + a.rad + b.rad <= tol,
/// inconclusive otherwise. Evaluated exactly on the dyadic values.
Comparison ball_compare(const Ball& a, const Ball& b, const Rational& tol);

std::string to_string(Comparison c);

/// Decimal midpoint with enough digits for the working precision.
std::string mid_string(const Ball& x);
/// Radius rounded up to a few significant digits.
std::string rad_string(const Ball& x);
/// "mid +/- rad".
std::string to_string(const Ball& x);

/// Decimal rendering of a non-negative rational bound, rounded up.
std::string upper_decimal(const Rational& x, int digits = 6);

}  // namespace binetkit
