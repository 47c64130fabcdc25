#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt(D)), D > 0.

#include "binetkit/bigseq.hpp"
#include "binetkit/number.hpp"

#include <iosfwd>
#include <string>

namespace binetkit {

/// a + b*sqrt(D) with rational a, b and a positive rational radicand D.
///
/// Elements are kept canonical: when D is the square of a rational d the
/// irrational part is folded into a (b = 0), so equality is structural.
/// Arithmetic between different radicands throws std::invalid_argument;
/// sqrt(D) always means the positive root.
class QuadElement {
public:
    QuadElement() : d_(5) {}
    QuadElement(Rational a, Rational b, Rational d);
    /// Rational embedded in Q(sqrt(d)).
    QuadElement(Rational a, Rational d) : QuadElement(std::move(a), 0, std::move(d)) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// a - b*sqrt(D).
    QuadElement conj() const;
    /// a^2 - D b^2.
    Rational norm() const;

    QuadElement& operator+=(const QuadElement& y);
    QuadElement& operator-=(const QuadElement& y);
    QuadElement& operator*=(const QuadElement& y);
    QuadElement& operator/=(const QuadElement& y);
    QuadElement& operator*=(const Rational& y);
    QuadElement& operator/=(const Rational& y);
    QuadElement& operator+=(const Rational& y);
    QuadElement& operator-=(const Rational& y);

    QuadElement operator-() const { return {-a_, -b_, d_}; }

    friend bool operator==(const QuadElement& x, const QuadElement& y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    void check_same_field(const QuadElement& y) const;
    void canonicalize();

    Rational a_;
    Rational b_;
    Rational d_;
    bool d_is_square_ = false;
    Rational sqrt_d_;
};

QuadElement operator+(QuadElement x, const QuadElement& y);
QuadElement operator-(QuadElement x, const QuadElement& y);
QuadElement operator*(QuadElement x, const QuadElement& y);
QuadElement operator/(QuadElement x, const QuadElement& y);
QuadElement operator*(QuadElement x, const Rational& y);
QuadElement operator*(const Rational& x, QuadElement y);
QuadElement operator/(QuadElement x, const Rational& y);
QuadElement operator+(QuadElement x, const Rational& y);
QuadElement operator+(const Rational& x, QuadElement y);
QuadElement operator-(QuadElement x, const Rational& y);
QuadElement operator-(const Rational& x, const QuadElement& y);

/// x^k; negative k goes through the inverse. Throws std::domain_error for 0^k, k < 0.
QuadElement pow(const QuadElement& x, long k);

/// sqrt(D) as an element of Q(sqrt(D)).
QuadElement sqrt_of(const Rational& d);

enum class QuadOp { add, sub, mul, div, conj };

/// Dispatching form of the field operations; conj ignores y.
QuadElement q_arith(const QuadElement& x, const QuadElement& y, QuadOp op);

/// "a + b*sqrt(D)" with rationals rendered as p/q.
std::string to_string(const QuadElement& x);
std::ostream& operator<<(std::ostream& os, const QuadElement& x);

/// Zeros tau > sigma of x^2 - p x + q.
struct RootPair {
    QuadElement tau;
    QuadElement sigma;
    Rational p;
    Rational q;
};

/// Throws std::domain_error unless p^2 - 4q > 0.
RootPair roots_of(const Rational& p, const Rational& q);

/// (1 + sqrt 5)/2 and (1 - sqrt 5)/2.
QuadElement golden_alpha();
QuadElement golden_beta();

/// Binet coefficients A = (b - a sigma)/(tau - sigma), B = (a tau - b)/(tau - sigma),
/// so that w_j = A tau^j + B sigma^j.
struct BinetCoefficients {
    RootPair roots;
    QuadElement A;
    QuadElement B;
};

BinetCoefficients binet_coefficients(const HoradamParams& params);

}  // namespace binetkit
