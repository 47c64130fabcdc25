#include "binetkit/ball.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace binetkit {

namespace detail {

MpfrValue::MpfrValue(long prec)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(prec));
    mpfr_set_zero(value_, 1);
}

MpfrValue::MpfrValue(const MpfrValue& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpfrValue::MpfrValue(MpfrValue&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

MpfrValue& MpfrValue::operator=(const MpfrValue& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

MpfrValue& MpfrValue::operator=(MpfrValue&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

MpfrValue::~MpfrValue() { mpfr_clear(value_); }

}  // namespace detail

using detail::MpfrValue;

namespace {

constexpr long rad_prec = 64;

long checked_precision(long prec)
{
    if (prec < min_precision || prec > max_precision) {
        throw std::invalid_argument("precision " + std::to_string(prec) + " bits outside ["
                                    + std::to_string(min_precision) + ", " + std::to_string(max_precision) + "]");
    }
    return prec;
}

// Adds the round-to-nearest error bound (half an ulp of `mid`) to `rad`
// when the operation that produced `mid` was inexact.
void add_rounding(mpfr_ptr rad, mpfr_srcptr mid, int ternary)
{
    if (ternary == 0) {
        return;
    }
    MpfrValue half_ulp(rad_prec);
    if (mpfr_zero_p(mid) != 0) {
        mpfr_set_ui_2exp(half_ulp.get(), 1, mpfr_get_emin(), MPFR_RNDU);
    } else {
        const mpfr_exp_t e = mpfr_get_exp(mid);
        mpfr_set_ui_2exp(half_ulp.get(), 1, e - static_cast<mpfr_exp_t>(mpfr_get_prec(mid)) - 1, MPFR_RNDU);
    }
    mpfr_add(rad, rad, half_ulp.get(), MPFR_RNDU);
}

Rational to_q(mpfr_srcptr x)
{
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

std::string format_mpfr(const char* fmt, int digits, mpfr_srcptr x)
{
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits, x) < 0 || buf == nullptr) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace

class BallAccess {
public:
    static mpfr_ptr mid(Ball& b) { return b.mid_.get(); }
    static mpfr_ptr rad(Ball& b) { return b.rad_.get(); }
};

Ball::Ball(long prec) : mid_(checked_precision(prec)), rad_(rad_prec), prec_(prec) {}

Rational Ball::mid_q() const { return to_q(mid_.get()); }
Rational Ball::rad_q() const { return to_q(rad_.get()); }
Rational Ball::lower_q() const { return mid_q() - rad_q(); }
Rational Ball::upper_q() const { return mid_q() + rad_q(); }

bool Ball::contains(const Rational& x) const
{
    const Rational d = abs(x - mid_q());
    return d <= rad_q();
}

bool Ball::overlaps(const Ball& other) const
{
    const Rational d = abs(mid_q() - other.mid_q());
    return d <= rad_q() + other.rad_q();
}

bool Ball::is_positive() const { return mpfr_sgn(mid_.get()) > 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0; }
bool Ball::is_negative() const { return mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0; }

Ball Ball::from_mid_rad(mpfr_srcptr mid, mpfr_srcptr rad, long prec)
{
    if (mpfr_sgn(rad) < 0 || mpfr_nan_p(rad) != 0 || mpfr_inf_p(rad) != 0) {
        throw std::invalid_argument("ball radius must be finite and non-negative");
    }
    Ball out(prec);
    const int t = mpfr_set(out.mid_.get(), mid, MPFR_RNDN);
    mpfr_set(out.rad_.get(), rad, MPFR_RNDU);
    add_rounding(out.rad_.get(), out.mid_.get(), t);
    return out;
}

Ball Ball::from_endpoints(mpfr_srcptr lower, mpfr_srcptr upper, long prec)
{
    if (mpfr_cmp(lower, upper) > 0) {
        throw std::invalid_argument("ball endpoints out of order");
    }
    Ball out(prec);
    const long work = std::max<long>({prec, static_cast<long>(mpfr_get_prec(lower)),
                                      static_cast<long>(mpfr_get_prec(upper))})
                      + 2;
    MpfrValue sum(work);
    mpfr_add(sum.get(), lower, upper, MPFR_RNDN);
    mpfr_div_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
    mpfr_set(out.mid_.get(), sum.get(), MPFR_RNDN);
    MpfrValue up(rad_prec);
    MpfrValue down(rad_prec);
    mpfr_sub(up.get(), upper, out.mid_.get(), MPFR_RNDU);
    mpfr_sub(down.get(), out.mid_.get(), lower, MPFR_RNDU);
    mpfr_max(out.rad_.get(), up.get(), down.get(), MPFR_RNDU);
    if (mpfr_sgn(out.rad_.get()) < 0) {
        mpfr_set_zero(out.rad_.get(), 1);
    }
    return out;
}

Ball& Ball::add_error(const Rational& err)
{
    if (err < 0) {
        throw std::invalid_argument("error bound must be non-negative");
    }
    MpfrValue e(rad_prec);
    mpfr_set_q(e.get(), err.get_mpq_t(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
    return *this;
}

Ball& Ball::operator+=(const Ball& y)
{
    const long prec = std::max(prec_, y.prec_);
    MpfrValue m(prec);
    const int t = mpfr_add(m.get(), mid_.get(), y.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), y.rad_.get(), MPFR_RNDU);
    add_rounding(rad_.get(), m.get(), t);
    mid_ = std::move(m);
    prec_ = prec;
    return *this;
}

Ball& Ball::operator-=(const Ball& y)
{
    const long prec = std::max(prec_, y.prec_);
    MpfrValue m(prec);
    const int t = mpfr_sub(m.get(), mid_.get(), y.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), y.rad_.get(), MPFR_RNDU);
    add_rounding(rad_.get(), m.get(), t);
    mid_ = std::move(m);
    prec_ = prec;
    return *this;
}

Ball& Ball::operator*=(const Ball& y)
{
    const long prec = std::max(prec_, y.prec_);
    MpfrValue m(prec);
    const int t = mpfr_mul(m.get(), mid_.get(), y.mid_.get(), MPFR_RNDN);

    // |x||ry| + |y||rx| + rx ry
    MpfrValue ax(prec_);
    MpfrValue ay(y.prec_);
    mpfr_abs(ax.get(), mid_.get(), MPFR_RNDN);
    mpfr_abs(ay.get(), y.mid_.get(), MPFR_RNDN);
    MpfrValue r(rad_prec);
    MpfrValue term(rad_prec);
    mpfr_mul(r.get(), ax.get(), y.rad_.get(), MPFR_RNDU);
    mpfr_mul(term.get(), ay.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), rad_.get(), y.rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), term.get(), MPFR_RNDU);
    add_rounding(r.get(), m.get(), t);

    mid_ = std::move(m);
    rad_ = std::move(r);
    prec_ = prec;
    return *this;
}

Ball& Ball::operator/=(const Ball& y)
{
    if (mpfr_zero_p(y.mid_.get()) != 0 && mpfr_zero_p(y.rad_.get()) != 0) {
        throw DomainError("division by zero");
    }
    if (mpfr_cmpabs(y.mid_.get(), y.rad_.get()) <= 0) {
        throw PrecisionError("divisor ball contains zero");
    }
    const long prec = std::max(prec_, y.prec_);
    MpfrValue m(prec);
    const int t = mpfr_div(m.get(), mid_.get(), y.mid_.get(), MPFR_RNDN);

    // (|y| rx + |x| ry) / (|y| (|y| - ry))
    MpfrValue ax(prec_);
    MpfrValue ay(y.prec_);
    mpfr_abs(ax.get(), mid_.get(), MPFR_RNDN);
    mpfr_abs(ay.get(), y.mid_.get(), MPFR_RNDN);
    MpfrValue num(rad_prec);
    MpfrValue term(rad_prec);
    mpfr_mul(num.get(), ay.get(), rad_.get(), MPFR_RNDU);
    mpfr_mul(term.get(), ax.get(), y.rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), term.get(), MPFR_RNDU);
    MpfrValue den(rad_prec);
    mpfr_sub(den.get(), ay.get(), y.rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), ay.get(), MPFR_RNDD);
    MpfrValue r(rad_prec);
    if (mpfr_zero_p(num.get()) != 0) {
        mpfr_set_zero(r.get(), 1);
    } else {
        if (mpfr_sgn(den.get()) <= 0) {
            throw PrecisionError("divisor ball too close to zero");
        }
        mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
    }
    add_rounding(r.get(), m.get(), t);

    mid_ = std::move(m);
    rad_ = std::move(r);
    prec_ = prec;
    return *this;
}

Ball Ball::operator-() const
{
    Ball out(*this);
    mpfr_neg(out.mid_.get(), out.mid_.get(), MPFR_RNDN);
    return out;
}

Ball operator+(Ball x, const Ball& y) { return x += y; }
Ball operator-(Ball x, const Ball& y) { return x -= y; }
Ball operator*(Ball x, const Ball& y) { return x *= y; }
Ball operator/(Ball x, const Ball& y) { return x /= y; }
Ball operator*(Ball x, const Rational& y) { return x *= ball_from_rational(y, x.precision()); }
Ball operator*(const Rational& x, Ball y) { return y *= ball_from_rational(x, y.precision()); }
Ball operator/(Ball x, const Rational& y) { return x /= ball_from_rational(y, x.precision()); }
Ball operator+(Ball x, const Rational& y) { return x += ball_from_rational(y, x.precision()); }
Ball operator-(Ball x, const Rational& y) { return x -= ball_from_rational(y, x.precision()); }

Ball ball_from_rational(const Rational& x, long prec)
{
    Ball out(prec);
    const int t = mpfr_set_q(BallAccess::mid(out), x.get_mpq_t(), MPFR_RNDN);
    add_rounding(BallAccess::rad(out), out.mid(), t);
    return out;
}

Ball ball_from_integer(const Integer& x, long prec)
{
    Ball out(prec);
    const int t = mpfr_set_z(BallAccess::mid(out), x.get_mpz_t(), MPFR_RNDN);
    add_rounding(BallAccess::rad(out), out.mid(), t);
    return out;
}

Ball ball_from_quad(const QuadElement& x, long prec)
{
    if (x.radicand() <= 0) {
        throw DomainError("quadratic element with non-positive radicand");
    }
    if (x.is_rational()) {
        return ball_from_rational(x.a(), prec);
    }
    return ball_from_rational(x.a(), prec) + ball_from_rational(x.b(), prec) * sqrt(ball_from_rational(x.radicand(), prec));
}

Ball const_pi(long prec)
{
    checked_precision(prec);
    MpfrValue lo(prec);
    MpfrValue hi(prec);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return Ball::from_endpoints(lo.get(), hi.get(), prec);
}

namespace {

using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

struct Endpoints {
    MpfrValue lo;
    MpfrValue hi;
};

Endpoints endpoints(const Ball& x)
{
    const long wide = x.precision() + 64;
    Endpoints e{MpfrValue(wide), MpfrValue(wide)};
    mpfr_sub(e.lo.get(), x.mid(), x.rad(), MPFR_RNDD);
    mpfr_add(e.hi.get(), x.mid(), x.rad(), MPFR_RNDU);
    return e;
}

Ball monotone(const Ball& x, const Endpoints& e, MpfrFn f, bool increasing)
{
    const long prec = x.precision();
    MpfrValue lo(prec);
    MpfrValue hi(prec);
    if (increasing) {
        f(lo.get(), e.lo.get(), MPFR_RNDD);
        f(hi.get(), e.hi.get(), MPFR_RNDU);
    } else {
        f(lo.get(), e.hi.get(), MPFR_RNDD);
        f(hi.get(), e.lo.get(), MPFR_RNDU);
    }
    return Ball::from_endpoints(lo.get(), hi.get(), prec);
}

}  // namespace

Ball sqrt(const Ball& x)
{
    const Endpoints e = endpoints(x);
    if (mpfr_sgn(e.lo.get()) < 0) {
        if (mpfr_sgn(e.hi.get()) < 0) {
            throw DomainError("sqrt of a negative ball");
        }
        throw PrecisionError("sqrt argument ball straddles zero");
    }
    return monotone(x, e, mpfr_sqrt, true);
}

Ball log(const Ball& x)
{
    const Endpoints e = endpoints(x);
    if (mpfr_sgn(e.lo.get()) <= 0) {
        if (mpfr_sgn(e.hi.get()) <= 0) {
            throw DomainError("log of a non-positive ball");
        }
        throw PrecisionError("log argument ball straddles zero");
    }
    return monotone(x, e, mpfr_log, true);
}

Ball asin(const Ball& x)
{
    const Endpoints e = endpoints(x);
    if (mpfr_cmp_si(e.lo.get(), 1) > 0 || mpfr_cmp_si(e.hi.get(), -1) < 0) {
        throw DomainError("arcsin argument outside [-1, 1]");
    }
    if (mpfr_cmp_si(e.lo.get(), -1) < 0 || mpfr_cmp_si(e.hi.get(), 1) > 0) {
        throw PrecisionError("arcsin argument ball straddles the domain boundary");
    }
    return monotone(x, e, mpfr_asin, true);
}

Ball atan(const Ball& x) { return monotone(x, endpoints(x), mpfr_atan, true); }

Ball acos(const Ball& x)
{
    Ball half_pi = const_pi(x.precision()) / Rational(2);
    return half_pi - asin(x);
}

Ball cot(const Ball& x)
{
    const Endpoints e = endpoints(x);
    const Ball pi = const_pi(x.precision() + 64);
    MpfrValue pi_lo(pi.precision());
    MpfrValue pi_hi(pi.precision());
    mpfr_sub(pi_lo.get(), pi.mid(), pi.rad(), MPFR_RNDD);
    mpfr_add(pi_hi.get(), pi.mid(), pi.rad(), MPFR_RNDU);
    if (mpfr_sgn(e.hi.get()) <= 0 || mpfr_cmp(e.lo.get(), pi_hi.get()) >= 0) {
        throw DomainError("cot helper only covers (0, pi)");
    }
    if (mpfr_sgn(e.lo.get()) <= 0 || mpfr_cmp(e.hi.get(), pi_lo.get()) >= 0) {
        throw PrecisionError("cot argument ball touches a pole");
    }
    return monotone(x, e, mpfr_cot, false);
}

Ball abs(const Ball& x) { return mpfr_sgn(x.mid()) < 0 ? -x : x; }

Ball pow(const Ball& x, unsigned long k)
{
    Ball result = ball_from_integer(1, x.precision());
    Ball base = x;
    for (; k != 0; k >>= 1) {
        if (k & 1UL) {
            result *= base;
        }
        if (k > 1) {
            base *= base;
        }
    }
    return result;
}

Ball elem_fn(ElemFn f, const Ball& x)
{
    switch (f) {
    case ElemFn::sqrt:
        return sqrt(x);
    case ElemFn::log:
        return log(x);
    case ElemFn::arcsin:
        return asin(x);
    case ElemFn::arctan:
        return atan(x);
    }
    throw std::invalid_argument("unknown elementary function");
}

Comparison ball_compare(const Ball& a, const Ball& b, const Rational& tol)
{
    if (tol <= 0) {
        throw std::invalid_argument("comparison tolerance must be positive");
    }
    const Rational gap = abs(a.mid_q() - b.mid_q());
    const Rational radii = a.rad_q() + b.rad_q();
    if (gap > radii + tol) {
        return Comparison::disjoint_beyond_tol;
    }
    if (gap + radii <= tol) {
        return Comparison::overlap_within_tol;
    }
    return Comparison::inconclusive;
}

std::string to_string(Comparison c)
{
    switch (c) {
    case Comparison::overlap_within_tol:
        return "overlap_within_tol";
    case Comparison::disjoint_beyond_tol:
        return "disjoint_beyond_tol";
    case Comparison::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string mid_string(const Ball& x)
{
    const int digits = static_cast<int>(std::floor(static_cast<double>(x.precision()) * 0.30102999566398)) + 1;
    return format_mpfr("%.*RNe", digits, x.mid());
}

std::string rad_string(const Ball& x) { return format_mpfr("%.*RUe", 2, x.rad()); }

std::string to_string(const Ball& x) { return mid_string(x) + " +/- " + rad_string(x); }

std::string upper_decimal(const Rational& x, int digits)
{
    MpfrValue v(rad_prec);
    mpfr_set_q(v.get(), x.get_mpq_t(), MPFR_RNDU);
    return format_mpfr("%.*RUe", digits, v.get());
}

}  // namespace binetkit
