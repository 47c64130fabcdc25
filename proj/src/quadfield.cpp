#include "binetkit/quadfield.hpp"

#include <ostream>
#include <stdexcept>

namespace binetkit {

namespace {

// sqrt(x) when x is the square of a rational.
bool rational_sqrt(const Rational& x, Rational& root)
{
    if (x < 0) {
        return false;
    }
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0
        || mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) {
        return false;
    }
    Integer n;
    Integer d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    root = make_rational(n, d);
    return true;
}

}  // namespace

QuadElement::QuadElement(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d))
{
    a_.canonicalize();
    b_.canonicalize();
    d_.canonicalize();
    if (d_ <= 0) {
        throw std::domain_error("quadratic field radicand must be positive, got " + to_string(d_));
    }
    d_is_square_ = rational_sqrt(d_, sqrt_d_);
    canonicalize();
}

void QuadElement::canonicalize()
{
    if (d_is_square_ && b_ != 0) {
        a_ += b_ * sqrt_d_;
        b_ = 0;
    }
}

void QuadElement::check_same_field(const QuadElement& y) const
{
    if (d_ != y.d_) {
        throw std::invalid_argument("mixed quadratic fields: sqrt(" + to_string(d_) + ") vs sqrt("
                                    + to_string(y.d_) + ")");
    }
}

QuadElement QuadElement::conj() const { return {a_, -b_, d_}; }

Rational QuadElement::norm() const { return a_ * a_ - d_ * b_ * b_; }

QuadElement& QuadElement::operator+=(const QuadElement& y)
{
    check_same_field(y);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& y)
{
    check_same_field(y);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& y)
{
    check_same_field(y);
    Rational a = a_ * y.a_ + d_ * b_ * y.b_;
    Rational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadElement& QuadElement::operator/=(const QuadElement& y)
{
    check_same_field(y);
    if (y.is_zero()) {
        throw std::domain_error("division by zero in Q(sqrt(" + to_string(d_) + "))");
    }
    // x / y = x * conj(y) / N(y); N(y) != 0 for y != 0 in canonical form.
    const Rational n = y.norm();
    *this *= y.conj();
    a_ /= n;
    b_ /= n;
    return *this;
}

QuadElement& QuadElement::operator*=(const Rational& y)
{
    a_ *= y;
    b_ *= y;
    return *this;
}

QuadElement& QuadElement::operator/=(const Rational& y)
{
    if (y == 0) {
        throw std::domain_error("division by zero in Q(sqrt(" + to_string(d_) + "))");
    }
    a_ /= y;
    b_ /= y;
    return *this;
}

QuadElement& QuadElement::operator+=(const Rational& y)
{
    a_ += y;
    return *this;
}

QuadElement& QuadElement::operator-=(const Rational& y)
{
    a_ -= y;
    return *this;
}

QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }
QuadElement operator*(QuadElement x, const Rational& y) { return x *= y; }
QuadElement operator*(const Rational& x, QuadElement y) { return y *= x; }
QuadElement operator/(QuadElement x, const Rational& y) { return x /= y; }
QuadElement operator+(QuadElement x, const Rational& y) { return x += y; }
QuadElement operator+(const Rational& x, QuadElement y) { return y += x; }
QuadElement operator-(QuadElement x, const Rational& y) { return x -= y; }
QuadElement operator-(const Rational& x, const QuadElement& y) { return -y + x; }

QuadElement pow(const QuadElement& x, long k)
{
    if (k < 0) {
        if (x.is_zero()) {
            throw std::domain_error("zero raised to a negative power");
        }
        const QuadElement one(1, x.radicand());
        return pow(one / x, -(k + 1)) / x;
    }
    QuadElement result(1, x.radicand());
    QuadElement base = x;
    for (auto e = static_cast<unsigned long>(k); e != 0; e >>= 1) {
        if (e & 1UL) {
            result *= base;
        }
        if (e > 1) {
            base *= base;
        }
    }
    return result;
}

QuadElement sqrt_of(const Rational& d) { return {0, 1, d}; }

QuadElement q_arith(const QuadElement& x, const QuadElement& y, QuadOp op)
{
    switch (op) {
    case QuadOp::add:
        return x + y;
    case QuadOp::sub:
        return x - y;
    case QuadOp::mul:
        return x * y;
    case QuadOp::div:
        return x / y;
    case QuadOp::conj:
        return x.conj();
    }
    throw std::invalid_argument("unknown quadratic field operation");
}

std::string to_string(const QuadElement& x)
{
    std::string out = to_string(x.a());
    if (x.b() != 0) {
        out += x.b() < 0 ? " - " : " + ";
        out += to_string(Rational(abs(x.b())));
        out += "*sqrt(" + to_string(x.radicand()) + ")";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadElement& x) { return os << to_string(x); }

RootPair roots_of(const Rational& p, const Rational& q)
{
    const Rational d = p * p - 4 * q;
    if (d <= 0) {
        throw std::domain_error("degenerate characteristic polynomial: p^2 - 4q = " + to_string(d));
    }
    const Rational half(1, 2);
    QuadElement tau(p * half, half, d);
    QuadElement sigma(p * half, -half, d);
    return {std::move(tau), std::move(sigma), p, q};
}

QuadElement golden_alpha() { return roots_of(1, -1).tau; }
QuadElement golden_beta() { return roots_of(1, -1).sigma; }

BinetCoefficients binet_coefficients(const HoradamParams& params)
{
    RootPair roots = roots_of(params.p, params.q);
    const QuadElement diff = roots.tau - roots.sigma;
    QuadElement A = (params.b - params.a * roots.sigma) / diff;
    QuadElement B = (params.a * roots.tau - params.b) / diff;
    return {std::move(roots), std::move(A), std::move(B)};
}

}  // namespace binetkit
