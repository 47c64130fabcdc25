#include "binetkit/finite_identities.hpp"

#include "binetkit/binomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace binetkit {

namespace {

void require_order(long n)
{
    if (n < 0) {
        throw std::domain_error("identity order n must be non-negative, got " + std::to_string(n));
    }
}

Rational reciprocal(const Integer& x) { return make_rational(1, x); }

Rational two_pow(long k) { return pow(Rational(2), k); }

Rational one_like(const Rational&) { return 1; }
QuadElement one_like(const QuadElement& z) { return {1, z.radicand()}; }

bool is_minus_one(const Rational& z) { return z == -1; }
bool is_minus_one(const QuadElement& z) { return z.is_rational() && z.a() == -1; }

template <class T>
SidePair<T> gould_impl(const T& z, long n)
{
    require_order(n);
    if (is_minus_one(z)) {
        throw std::domain_error("Gould's identity is undefined at z = -1");
    }
    const T one = one_like(z);

    T lhs = one - one;
    T zj = one;
    for (long j = 0; j <= n; ++j) {
        lhs += zj * reciprocal(binomial(n, j));
        zj *= z;
    }

    const T one_plus_z = one + z;
    const T ratio = z / one_plus_z;
    T acc = one - one;
    T zj1 = z;  // z^{j+1}
    for (long j = 0; j <= n; ++j) {
        acc += (one + zj1) * pow(ratio, n - j) / Rational(j + 1);
        zj1 *= z;
    }
    T rhs = acc * Rational(n + 1) / one_plus_z;
    return make_sides(std::move(lhs), std::move(rhs));
}

}  // namespace

Integer seq_value(SeqKind kind, long j) { return kind == SeqKind::F ? fibonacci(j) : lucas(j); }

SidePair<Rational> eq1_sides(long n)
{
    require_order(n);
    Rational lhs = 0;
    for (long j = 0; j <= n; ++j) {
        lhs += reciprocal(binomial(n, j));
    }
    Rational acc = 0;
    for (long j = 0; j <= n; ++j) {
        acc += make_rational(pow(Integer(2), static_cast<unsigned long>(j)), j + 1);
    }
    Rational rhs = Rational(n + 1) / two_pow(n) * acc;
    return make_sides(std::move(lhs), std::move(rhs));
}

SidePair<Rational> gould_check(const Rational& z, long n) { return gould_impl(z, n); }
SidePair<QuadElement> gould_check(const QuadElement& z, long n) { return gould_impl(z, n); }

SidePair<Rational> thm1_sides(long n, long s, SeqKind kind)
{
    require_order(n);
    Rational lhs = 0;
    for (long j = 0; j <= n; ++j) {
        lhs += Rational(seq_value(kind, j + n + s)) / Rational(binomial(n, j));
    }
    Rational acc = 0;
    for (long j = 0; j <= n; ++j) {
        acc += make_rational(seq_value(kind, j + s - 2) + seq_value(kind, 2 * j + s - 1), j + 1);
    }
    Rational rhs = Rational(n + 1) * acc;
    return make_sides(std::move(lhs), std::move(rhs));
}

SidePair<Rational> thm2_sides(long n, long s, SeqKind kind, HalvedWeight weight)
{
    require_order(n);
    const long m = 2 * n;
    Rational lhs = 0;
    for (long j = 0; j <= m; ++j) {
        const long e = weight == HalvedWeight::proof ? j + 1 : j + s;
        lhs += Rational(seq_value(kind, j + s)) / (two_pow(e) * Rational(binomial(m, j)));
    }

    const Integer f_sm1 = fibonacci(s - 1);
    const Integer l_sm1 = lucas(s - 1);
    Rational odd_5 = 0;    // sum_{j=1}^n 5^j/(2j)
    Rational even_5 = 0;   // sum_{j=0}^n 5^j/(2j+1)
    Rational odd_x = 0;    // F: sum_{j=1}^n 5^j F_{2j+s-1}/(2^{2j} 2j);  L: same with L and 5^{j-1}
    Rational even_x = 0;   // F: sum_{j=0}^n 5^j L_{2j+s}/(2^{2j+1}(2j+1));  L: 5^j F_{2j+s}/(...)
    for (long j = 0; j <= n; ++j) {
        const Rational five_j = pow(Rational(5), j);
        even_5 += five_j / Rational(2 * j + 1);
        const Integer even_seq = kind == SeqKind::F ? lucas(2 * j + s) : fibonacci(2 * j + s);
        even_x += five_j * Rational(even_seq) / (two_pow(2 * j + 1) * Rational(2 * j + 1));
        if (j >= 1) {
            const Rational five_w = kind == SeqKind::F ? five_j : pow(Rational(5), j - 1);
            odd_5 += five_w / Rational(2 * j);
            odd_x += five_w * Rational(seq_value(kind, 2 * j + s - 1)) / (two_pow(2 * j) * Rational(2 * j));
        }
    }

    Rational rhs;
    if (kind == SeqKind::F) {
        const Rational c = Rational(2 * n + 1) / pow(Rational(5), n + 1);
        rhs = c * (Rational(f_sm1) * odd_5 + Rational(l_sm1) * even_5) + c * (odd_x + even_x);
    } else {
        const Rational c = Rational(2 * n + 1) / pow(Rational(5), n);
        rhs = c * (Rational(f_sm1) * even_5 + Rational(l_sm1) * odd_5) + c * (even_x + odd_x);
    }
    return make_sides(std::move(lhs), std::move(rhs));
}

SidePair<Rational> thm3_sides(long n, long r, long s, SeqKind kind)
{
    require_order(n);
    Rational lhs = 0;
    for (long j = 0; j <= n; ++j) {
        const int sign = minus_one_pow(r * j);
        lhs += Rational(sign * seq_value(kind, 2 * r * j + s)) / Rational(binomial(n, j));
    }
    const Rational l_r = Rational(lucas(r));
    Rational acc = 0;
    Rational l_r_j = 1;
    for (long j = 0; j <= n; ++j) {
        const int sign = minus_one_pow(r * j);
        acc += Rational(sign) * l_r_j * Rational(lucas(r * (j + 1))) / Rational(j + 1);
        l_r_j *= l_r;
    }
    Rational rhs = Rational(n + 1) * Rational(seq_value(kind, r * n + s)) / pow(l_r, n + 1) * acc;
    return make_sides(std::move(lhs), std::move(rhs));
}

SidePair<Rational> horadam_sides(long n, long r, long s, const HoradamTable& w, const HoradamTable& v)
{
    require_order(n);
    const Rational& q = w.params().q;
    const Rational& v_r = v[r];
    if (v_r == 0) {
        throw std::domain_error("v_r vanishes for r = " + std::to_string(r));
    }
    const Rational q_r = pow(q, r);

    Rational lhs = 0;
    Rational q_rj = 1;  // q^{rj}
    for (long j = 0; j <= n; ++j) {
        lhs += w[2 * r * j + s] / (q_rj * Rational(binomial(n, j)));
        q_rj *= q_r;
    }

    Rational acc = 0;
    Rational v_r_j = 1;
    q_rj = 1;
    for (long j = 0; j <= n; ++j) {
        acc += v_r_j * v[r * (j + 1)] / (q_rj * Rational(j + 1));
        v_r_j *= v_r;
        q_rj *= q_r;
    }
    Rational rhs = Rational(n + 1) * w[r * n + s] / pow(v_r, n + 1) * acc;
    return make_sides(std::move(lhs), std::move(rhs));
}

SidePair<Rational> horadam_sides(long n, long r, long s, const HoradamParams& params)
{
    require_order(n);
    if (params.q == 0) {
        throw std::invalid_argument("Horadam parameter q must be nonzero");
    }
    if (params.discriminant() <= 0) {
        throw std::domain_error("degenerate Horadam parameters: p^2 - 4q = " + to_string(params.discriminant()));
    }
    const long reach = std::max({std::labs(s), std::labs(2 * r * n + s), std::labs(r * n + s), std::labs(r * (n + 1)), 1L});
    const HoradamTable w(params, -reach, reach);
    const HoradamTable v({2, params.p, params.p, params.q}, -reach, reach);
    return horadam_sides(n, r, s, w, v);
}

SidePair<Rational> thm4_sides(long n, long s, AltVariant variant, SeqKind kind)
{
    require_order(n);
    const bool alt = variant == AltVariant::alternating;
    Rational lhs = 0;
    for (long j = 0; j <= n; ++j) {
        const Integer x = seq_value(kind, alt ? 3 * j + s - 2 * n : 3 * j + s - n);
        lhs += Rational(alt ? minus_one_pow(j) * x : x) / Rational(binomial(n, j));
    }
    Rational acc = 0;
    for (long j = 0; j <= n; ++j) {
        Integer inner;
        if (alt) {
            inner = seq_value(kind, s + j + 2) + minus_one_pow(j - 1) * seq_value(kind, s - 2 * j - 1);
            inner *= minus_one_pow(j);
        } else {
            inner = seq_value(kind, s + 2 * j + 1) + seq_value(kind, s - j - 2);
        }
        acc += two_pow(j) * Rational(inner) / Rational(j + 1);
    }
    Rational rhs = Rational(n + 1) / two_pow(n + 1) * acc;
    return make_sides(std::move(lhs), std::move(rhs));
}

}  // namespace binetkit
