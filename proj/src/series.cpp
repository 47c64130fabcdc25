#include "binetkit/series.hpp"

#include "binetkit/bigseq.hpp"
#include "binetkit/binomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace binetkit {

Rational ExactTerm::value() const { return make_rational(num * factor, den); }

Ball ExactTerm::to_ball(long prec) const
{
    if (num == 0 || factor == 0) {
        return Ball(prec);
    }
    Ball out = ball_from_integer(num, prec) / ball_from_integer(den, prec);
    if (factor != 1) {
        out *= ball_from_integer(factor, prec);
    }
    return out;
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::verified_exact:
        return "VERIFIED_EXACT";
    case Status::verified_numeric:
        return "VERIFIED_NUMERIC";
    case Status::refuted:
        return "REFUTED";
    case Status::inconclusive:
        return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

Rational hm_weight(long m, long j)
{
    if (m < 1 || j < 1) {
        throw std::domain_error("hm_weight needs m >= 1 and j >= 1");
    }
    std::vector<Rational> h(static_cast<std::size_t>(m) + 1, Rational(0));
    h[1] = Rational(1, 4);
    for (long k = 1; k < j; ++k) {
        const Rational step = make_rational(1, Integer(4) * k * k);
        for (long i = m; i >= 2; --i) {
            h[i] += h[i - 1] * step;
        }
    }
    return h[m];
}

namespace {

Rational ratio(long a, long b) { return make_rational(a, b); }

Integer ipow(const Integer& x, long k) { return pow(x, static_cast<unsigned long>(k)); }

Rational round_up(const Rational& x)
{
    const Integer scale = pow(Integer(2), 64UL);
    Integer q;
    const Integer num = x.get_num() * scale;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    return make_rational(q, scale);
}

Rational abs_upper(const Ball& x)
{
    const Rational lo = abs(x.lower_q());
    const Rational hi = abs(x.upper_q());
    return std::max(lo, hi);
}

long ceil_div(long a, long b)
{
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Term layout  W(j) * H_m(j) * X_{k0 + d j}, with W advanced by an exact
// rational step and X walked with X_{k+d} = L_d X_k - (-1)^d X_{k-d}.
struct Shape {
    long start = 0;
    Integer wn = 1;
    Integer wd = 1;
    std::function<void(long, Integer&, Integer&)> step;
    long hm = 0;
    bool walk = false;
    SeqKind kind = SeqKind::F;
    long k0 = 0;
    long d = 0;
};

class ProductStream final : public TermStream {
public:
    explicit ProductStream(Shape shape)
        : shape_(std::move(shape)), j_(shape_.start), wn_(shape_.wn), wd_(shape_.wd)
    {
        if (shape_.hm > 0) {
            h_.assign(static_cast<std::size_t>(shape_.hm) + 1, Rational(0));
            h_[1] = Rational(1, 4);
            for (long k = 1; k < j_; ++k) {
                advance_h(k);
            }
        }
        if (shape_.walk) {
            const long k = shape_.k0 + shape_.d * j_;
            x_prev_ = seq_value(shape_.kind, k - shape_.d);
            x_ = seq_value(shape_.kind, k);
            l_d_ = lucas(shape_.d);
        }
    }

    long index() const override { return j_; }

    ExactTerm next() override
    {
        ExactTerm t{wn_, wd_};
        if (!h_.empty()) {
            t.num *= h_.back().get_num();
            t.den *= h_.back().get_den();
        }
        if (shape_.walk) {
            t.factor = x_;
            Integer next_x = l_d_ * x_ - minus_one_pow(shape_.d) * x_prev_;
            x_prev_ = std::move(x_);
            x_ = std::move(next_x);
        }
        shape_.step(j_, wn_, wd_);
        if (!h_.empty()) {
            advance_h(j_);
        }
        ++j_;
        return t;
    }

private:
    // H_i(k) -> H_i(k + 1)
    void advance_h(long k)
    {
        const Rational step = make_rational(1, Integer(4) * k * k);
        for (std::size_t i = h_.size() - 1; i >= 2; --i) {
            h_[i] += h_[i - 1] * step;
        }
    }

    Shape shape_;
    long j_;
    Integer wn_;
    Integer wd_;
    std::vector<Rational> h_;
    Integer x_prev_;
    Integer x_;
    Integer l_d_;
};

// First j >= start at which k0 + d j has modulus >= 1 and moves away from 0.
long walk_threshold(long k0, long d, long start)
{
    if (d == 0) {
        return start;
    }
    const long j = d > 0 ? ceil_div(1 - k0, d) : ceil_div(k0 + 1, -d);
    return std::max(start, j);
}

// sup over j >= j0 of |X_{k(j+1)}| / |X_{k(j)}|, k(j) = k0 + d j.
//
// For kappa >= 1, X_{kappa+D} = F_{D-1} X_kappa + F_D X_{kappa+1}, and the
// ratios X_{k+1}/X_k approach alpha alternately from both sides, so their
// supremum over k >= kappa is the larger of the first two. A smaller kappa
// only enlarges that supremum, which keeps the numbers small.
Rational walk_ratio(SeqKind kind, long k0, long d, long j0)
{
    if (d == 0) {
        return 1;
    }
    const long k = k0 + d * j0;
    if (d > 0 ? k < 1 : k > -1) {
        throw std::logic_error("walk_ratio below its threshold");
    }
    const long kappa = std::min(std::labs(k), 80L);
    const Rational x0(abs(seq_value(kind, kappa)));
    const Rational x1(abs(seq_value(kind, kappa + 1)));
    const Rational x2(abs(seq_value(kind, kappa + 2)));
    const Rational c = std::max<Rational>(x1 / x0, x2 / x1);
    const long step = std::labs(d);
    return Rational(fibonacci(step - 1)) + Rational(fibonacci(step)) * c;
}

// sup over j >= j0 of H_m(j+1)/H_m(j) = 1 + H_{m-1}(j)/(4 j^2 H_m(j)) <= 1 + 1/(16 j0^2 H_m(j0)),
// using H_{m-1} <= 1/4 and H_m nondecreasing in j. H_m(min(j0, cap)) is a
// smaller positive value, so the bound stays valid with cheap rationals.
Rational hm_ratio(long m, long j0)
{
    if (m == 1) {
        return 1;
    }
    const long cap = std::max(64L, m);
    const Rational h = hm_weight(m, std::min(j0, cap));
    return 1 + 1 / (16 * Rational(Integer(j0) * j0) * h);
}

void require_unit_disc(const Rational& z, const Rational& bound, const char* what)
{
    if (abs(z) >= bound) {
        throw std::domain_error(std::string(what) + " needs |z| < " + to_string(bound) + ", got " + to_string(z));
    }
}

Ball pi_ball(long prec) { return const_pi(prec); }

QuadElement golden_power(long s) { return QuadElement(Rational(lucas(s), 2), Rational(fibonacci(s), 2), 5); }

Integer other_value(SeqKind kind, long j) { return kind == SeqKind::F ? lucas(j) : fibonacci(j); }

const char* kind_name(SeqKind kind) { return kind == SeqKind::F ? "F" : "L"; }

SeriesFamily make_family(std::string id, std::string anchor, std::function<Shape(const SeriesParams&)> shape,
                         std::function<void(const SeriesParams&)> validate,
                         std::function<Rational(long, const SeriesParams&)> term,
                         std::function<Rational(const SeriesParams&, long)> ratio_bound,
                         std::function<Ball(const SeriesParams&, long)> closed)
{
    SeriesFamily f;
    f.id = std::move(id);
    f.anchor = std::move(anchor);
    f.validate = validate;
    f.start = [shape, validate](const SeriesParams& p) {
        validate(p);
        return shape(p).start;
    };
    f.term = [validate, term](long j, const SeriesParams& p) {
        validate(p);
        return term(j, p);
    };
    f.stream = [shape, validate](const SeriesParams& p) -> std::unique_ptr<TermStream> {
        validate(p);
        return std::make_unique<ProductStream>(shape(p));
    };
    f.threshold = [shape, validate](const SeriesParams& p) {
        validate(p);
        const Shape sh = shape(p);
        long j0 = sh.walk ? walk_threshold(sh.k0, sh.d, sh.start) : sh.start;
        return std::max(j0, sh.hm);
    };
    f.ratio_bound = [validate, ratio_bound](const SeriesParams& p, long j0) {
        validate(p);
        return ratio_bound(p, j0);
    };
    f.closed_form = [validate, closed](const SeriesParams& p, long prec) {
        validate(p);
        return closed(p, prec);
    };
    return f;
}

// ---- base series in z -------------------------------------------------------

void validate_lehmer(const SeriesParams& p) { require_unit_disc(p.z, 1, "arcsin series"); }

SeriesFamily lehmer_asin()
{
    auto shape = [](const SeriesParams& p) {
        const Integer p2 = p.z.get_num() * p.z.get_num();
        const Integer q2 = p.z.get_den() * p.z.get_den();
        Shape sh;
        sh.start = 1;
        sh.wn = 2 * p2;
        sh.wd = q2;
        sh.step = [p2, q2](long j, Integer& num, Integer& den) {
            num *= 2 * p2 * j;
            den *= q2 * (2 * j + 1);
        };
        return sh;
    };
    auto term = [](long j, const SeriesParams& p) -> Rational {
        return pow(Rational(4 * p.z * p.z), j) / Rational(Integer(j) * central_binomial(j));
    };
    // ratio 2 z^2 j/(2j+1) < z^2
    auto rho = [](const SeriesParams& p, long) -> Rational { return p.z * p.z; };
    auto closed = [](const SeriesParams& p, long prec) {
        const Ball z = ball_from_rational(p.z, prec);
        return 2 * z / sqrt(ball_from_rational(1 - p.z * p.z, prec)) * asin(z);
    };
    return make_family("lehmer.asin", "sum 2^{2j} z^{2j}/(j C(2j,j)) = 2z arcsin(z)/sqrt(1-z^2)", shape, validate_lehmer,
                       term, rho, closed);
}

SeriesFamily lehmer_asin_squared()
{
    auto shape = [](const SeriesParams& p) {
        const Integer p2 = p.z.get_num() * p.z.get_num();
        const Integer q2 = p.z.get_den() * p.z.get_den();
        Shape sh;
        sh.start = 1;
        sh.wn = 2 * p2;
        sh.wd = q2;
        sh.step = [p2, q2](long j, Integer& num, Integer& den) {
            num *= 2 * p2 * j * j;
            den *= q2 * (j + 1) * (2 * j + 1);
        };
        return sh;
    };
    auto term = [](long j, const SeriesParams& p) -> Rational {
        return pow(Rational(4 * p.z * p.z), j) / Rational(Integer(j) * j * central_binomial(j));
    };
    // ratio 2 z^2 j^2/((j+1)(2j+1)) < z^2
    auto rho = [](const SeriesParams& p, long) -> Rational { return p.z * p.z; };
    auto closed = [](const SeriesParams& p, long prec) {
        const Ball a = asin(ball_from_rational(p.z, prec));
        return 2 * (a * a);
    };
    return make_family("lehmer.asin2", "sum 2^{2j} z^{2j}/(j^2 C(2j,j)) = 2 arcsin(z)^2", shape, validate_lehmer, term,
                       rho, closed);
}

SeriesFamily lehmer_central()
{
    auto shape = [](const SeriesParams& p) {
        const Integer p2 = p.z.get_num() * p.z.get_num();
        const Integer q2 = p.z.get_den() * p.z.get_den();
        Shape sh;
        sh.start = 1;
        sh.wn = 2 * p2;
        sh.wd = q2;
        sh.step = [p2, q2](long j, Integer& num, Integer& den) {
            num *= 2 * p2 * (j + 1);
            den *= q2 * (2 * j + 1);
        };
        return sh;
    };
    auto term = [](long j, const SeriesParams& p) -> Rational { return pow(Rational(4 * p.z * p.z), j) / Rational(central_binomial(j)); };
    // ratio 2 z^2 (j+1)/(2j+1), decreasing in j
    auto rho = [](const SeriesParams& p, long j0) -> Rational { return p.z * p.z * ratio(2 * j0 + 2, 2 * j0 + 1); };
    auto closed = [](const SeriesParams& p, long prec) {
        const Rational w = 1 - p.z * p.z;
        const Ball z = ball_from_rational(p.z, prec);
        const Ball root = sqrt(ball_from_rational(w, prec));
        return ball_from_rational(p.z * p.z / w, prec) + z * asin(z) / (root * w);
    };
    return make_family("lehmer.central",
                       "sum 2^{2j} z^{2j}/C(2j,j) = z^2/(1-z^2) + z arcsin(z)/(1-z^2)^{3/2}", shape, validate_lehmer,
                       term, rho, closed);
}

SeriesFamily euler_atan()
{
    auto shape = [](const SeriesParams& p) {
        const Integer a = p.z.get_num() * p.z.get_num();
        const Integer b = a + p.z.get_den() * p.z.get_den();
        Shape sh;
        sh.start = 0;
        sh.wn = a;
        sh.wd = b;
        sh.step = [a, b](long j, Integer& num, Integer& den) {
            num *= 2 * a * (j + 1);
            den *= b * (2 * j + 3);
        };
        return sh;
    };
    auto term = [](long j, const SeriesParams& p) -> Rational {
        const Rational x = p.z * p.z / (1 + p.z * p.z);
        return Rational(pow(Integer(4), static_cast<unsigned long>(j))) * pow(x, j + 1)
               / Rational(Integer(2 * j + 1) * central_binomial(j));
    };
    // ratio x 2(j+1)/(2j+3) < x = z^2/(1+z^2) < 1
    auto rho = [](const SeriesParams& p, long) -> Rational { return p.z * p.z / (1 + p.z * p.z); };
    auto closed = [](const SeriesParams& p, long prec) {
        const Ball z = ball_from_rational(p.z, prec);
        return z * atan(z);
    };
    return make_family("euler.atan", "sum 2^{2j}/((2j+1) C(2j,j)) (z^2/(1+z^2))^{j+1} = z arctan(z)", shape,
                       [](const SeriesParams&) {}, term, rho, closed);
}

void validate_sury(const SeriesParams& p)
{
    if (p.n < 1 || p.m < 0) {
        throw std::domain_error("non-central series needs n >= 1 and m >= 0");
    }
    require_unit_disc(p.z, 1, "non-central series");
}

Rational harmonic(long k)
{
    Rational h = 0;
    for (long i = 1; i <= k; ++i) {
        h += ratio(1, i);
    }
    return h;
}

// Harmonic block of the non-central identities.
Rational harmonic_block(long n, long m, bool printed)
{
    if (!printed) {
        return harmonic(n - 1) - harmonic(m);
    }
    Rational h = 0;
    for (long i = m + 1; i <= n - 1; ++i) {
        h += ratio(1, i);
    }
    return h;
}

Ball sury_form(const SeriesParams& p, long prec, bool printed)
{
    const long n = p.n;
    const long m = p.m;
    const Rational w = p.z - 1;
    Rational first = 0;
    for (long j = 1; j <= n - 1; ++j) {
        first += Rational(binomial(n - 1, j)) * pow(w, n - j - 1) / Rational(Integer(j) * binomial(m + j, j));
    }
    Rational second = 0;
    for (long j = 1; j <= m; ++j) {
        second += Rational(binomial(m, j)) * pow(w, n + j - 1) / Rational(Integer(j) * binomial(n - 1 + j, j));
    }
    const Rational lead = pow(w, n - 1);
    const Rational exact = n * (first - second + lead * harmonic_block(n, m, printed));
    const Ball log_term = -log(ball_from_rational(1 - p.z, prec));
    return ball_from_rational(exact, prec) + (n * lead) * log_term;
}

SeriesFamily sury()
{
    auto shape = [](const SeriesParams& p) {
        const Integer a = p.z.get_num();
        const Integer b = p.z.get_den();
        const long n = p.n;
        Shape sh;
        sh.start = p.m;
        sh.wn = ipow(a, n + p.m);
        sh.wd = ipow(b, n + p.m) * binomial(n + p.m, p.m);
        sh.step = [a, b, n](long j, Integer& num, Integer& den) {
            num *= a * (j + 1);
            den *= b * (n + j + 1);
        };
        return sh;
    };
    auto term = [](long j, const SeriesParams& p) -> Rational {
        return pow(p.z, p.n + j) / Rational(binomial(p.n + j, j));
    };
    // ratio z (j+1)/(n+j+1), modulus < |z|
    auto rho = [](const SeriesParams& p, long) -> Rational { return Rational(abs(p.z)); };
    auto closed = [](const SeriesParams& p, long prec) { return sury_form(p, prec, false); };
    return make_family("sury",
                       "sum_{j>=m} z^{n+j}/C(n+j,j) = n sum C(n-1,j)(z-1)^{n-j-1}/(j C(m+j,j)) - n sum C(m,j)(z-1)^{n+j-1}"
                       "/(j C(n-1+j,j)) + n (z-1)^{n-1} (H_{n-1} - H_m) + n (z-1)^{n-1} log(1/(1-z))",
                       shape, validate_sury, term, rho, closed);
}

void validate_hm_gen(const SeriesParams& p)
{
    if (p.m < 1) {
        throw std::domain_error("nested harmonic series needs m >= 1");
    }
    require_unit_disc(p.z, 2, "nested harmonic series");
}

Rational factorial(long k)
{
    Integer f = 1;
    for (long i = 2; i <= k; ++i) {
        f *= i;
    }
    return Rational(f);
}

SeriesFamily hm_generating()
{
    auto shape = [](const SeriesParams& p) {
        const Integer p2 = p.z.get_num() * p.z.get_num();
        const Integer q2 = p.z.get_den() * p.z.get_den();
        Shape sh;
        sh.start = 1;
        sh.wn = p2;
        sh.wd = 2 * q2;
        sh.step = [p2, q2](long j, Integer& num, Integer& den) {
            num *= p2 * j * j;
            den *= 2 * q2 * (j + 1) * (2 * j + 1);
        };
        sh.hm = p.m;
        return sh;
    };
    auto term = [](long j, const SeriesParams& p) -> Rational {
        return hm_weight(p.m, j) * pow(p.z, 2 * j) / Rational(Integer(j) * j * central_binomial(j));
    };
    // weight ratio z^2 j^2/(2(j+1)(2j+1)) < z^2/4
    auto rho = [](const SeriesParams& p, long j0) -> Rational { return p.z * p.z / 4 * hm_ratio(p.m, std::max(j0, p.m)); };
    auto closed = [](const SeriesParams& p, long prec) {
        const Ball a = asin(ball_from_rational(p.z / 2, prec));
        return pow(a, static_cast<unsigned long>(2 * p.m)) / factorial(2 * p.m);
    };
    return make_family("hm.gen", "sum H_m(j) z^{2j}/(j^2 C(2j,j)) = arcsin(z/2)^{2m}/(2m)!", shape, validate_hm_gen,
                       term, rho, closed);
}

// ---- golden-ratio families --------------------------------------------------

Shape central_shape(SeqKind kind, long s)
{
    Shape sh;
    sh.start = 1;
    sh.wn = 1;
    sh.wd = 2;
    sh.walk = true;
    sh.kind = kind;
    sh.k0 = s;
    sh.d = 2;
    return sh;
}

SeriesFamily shifted_recip_j(SeqKind kind)
{
    auto shape = [kind](const SeriesParams& p) {
        Shape sh = central_shape(kind, p.s);
        sh.step = [](long j, Integer& num, Integer& den) {
            num *= j;
            den *= 2 * (2 * j + 1);
        };
        return sh;
    };
    auto term = [kind](long j, const SeriesParams& p) -> Rational {
        return make_rational(seq_value(kind, 2 * j + p.s), Integer(j) * central_binomial(j));
    };
    // weight ratio j/(2(2j+1)) < 1/4
    auto rho = [kind](const SeriesParams& p, long j0) -> Rational { return walk_ratio(kind, p.s, 2, j0) / 4; };
    auto closed = [kind](const SeriesParams& p, long prec) {
        const QuadElement c(-Rational(seq_value(kind, p.s - 1)), Rational(seq_value(kind, p.s + 1)), 5);
        return qb(c, prec) * pi_ball(prec) / Rational(5) * golden_cot(prec);
    };
    const std::string x = kind_name(kind);
    return make_family("thm5." + x,
                       "sum " + x + "_{2j+s}/(j C(2j,j)) = (" + x + "_{s+1} sqrt5 - " + x
                           + "_{s-1}) (pi/5) sqrt(alpha^3/sqrt5)",
                       shape, [](const SeriesParams&) {}, term, rho, closed);
}

SeriesFamily shifted_central(SeqKind kind)
{
    auto shape = [kind](const SeriesParams& p) {
        Shape sh = central_shape(kind, p.s);
        sh.step = [](long j, Integer& num, Integer& den) {
            num *= j + 1;
            den *= 2 * (2 * j + 1);
        };
        return sh;
    };
    auto term = [kind](long j, const SeriesParams& p) -> Rational {
        return make_rational(seq_value(kind, 2 * j + p.s), central_binomial(j));
    };
    // weight ratio (j+1)/(2(2j+1)), decreasing in j
    auto rho = [kind](const SeriesParams& p, long j0) -> Rational {
        return walk_ratio(kind, p.s, 2, j0) * ratio(j0 + 1, 2 * (2 * j0 + 1));
    };
    auto closed = [kind](const SeriesParams& p, long prec) {
        const long s = p.s;
        const Ball pi = pi_ball(prec);
        if (kind == SeqKind::F) {
            const QuadElement c(-Rational(lucas(s)), Rational(lucas(s + 2)), 5);
            return ball_from_rational(make_rational(lucas(s + 3), 5), prec)
                   + qb(c, prec) * pi * Rational(2, 25) * golden_cot(prec);
        }
        const QuadElement c(-Rational(fibonacci(s)), Rational(fibonacci(s + 2)), 5);
        return ball_from_integer(fibonacci(s + 3), prec) + qb(c, prec) * pi * Rational(2, 5) * golden_cot(prec);
    };
    const std::string anchor = kind == SeqKind::F
                                   ? "sum F_{2j+s}/C(2j,j) = L_{s+3}/5 + (L_{s+2} sqrt5 - L_s) (2pi/25) sqrt(alpha^3/sqrt5)"
                                   : "sum L_{2j+s}/C(2j,j) = F_{s+3} + (F_{s+2} sqrt5 - F_s) (2pi/5) sqrt(alpha^3/sqrt5)";
    return make_family(std::string("thm7.") + kind_name(kind), anchor, shape, [](const SeriesParams&) {}, term, rho,
                       closed);
}

void validate_hm(const SeriesParams& p)
{
    if (p.m < 1) {
        throw std::domain_error("nested harmonic order m must be >= 1");
    }
}

SeriesFamily nested_harmonic(SeqKind kind)
{
    auto shape = [kind](const SeriesParams& p) {
        Shape sh = central_shape(kind, p.s);
        sh.step = [](long j, Integer& num, Integer& den) {
            num *= j * j;
            den *= 2 * (j + 1) * (2 * j + 1);
        };
        sh.hm = p.m;
        return sh;
    };
    auto term = [kind](long j, const SeriesParams& p) -> Rational {
        return hm_weight(p.m, j) * make_rational(seq_value(kind, 2 * j + p.s), Integer(j) * j * central_binomial(j));
    };
    // weight ratio j^2/(2(j+1)(2j+1)) < 1/4, times the H_m growth
    auto rho = [kind](const SeriesParams& p, long j0) -> Rational {
        return walk_ratio(kind, p.s, 2, j0) / 4 * hm_ratio(p.m, std::max(j0, p.m));
    };
    auto closed = [kind](const SeriesParams& p, long prec) {
        const Rational three = Rational(pow(Integer(3), static_cast<unsigned long>(2 * p.m)));
        const QuadElement as = golden_power(p.s);
        const Rational ls(lucas(p.s));
        QuadElement c;
        if (kind == SeqKind::F) {
            const QuadElement t = (three + 1) * as - ls;
            c = QuadElement(t.b(), t.a() / 5, 5);
        } else {
            c = (three - 1) * as + ls;
        }
        const Rational scale = 1 / (factorial(2 * p.m) * Rational(pow(Integer(10), static_cast<unsigned long>(2 * p.m))));
        return qb(c, prec) * pow(pi_ball(prec), static_cast<unsigned long>(2 * p.m)) * scale;
    };
    const std::string anchor = kind == SeqKind::F
                                   ? "sum H_m(j) F_{2j+s}/(j^2 C(2j,j)) = (pi/10)^{2m}/(2m)! ((3^{2m}+1) alpha^s - L_s)/sqrt5"
                                   : "sum H_m(j) L_{2j+s}/(j^2 C(2j,j)) = (pi/10)^{2m}/(2m)! ((3^{2m}-1) alpha^s + L_s)";
    return make_family(std::string("hm.") + kind_name(kind), anchor, shape, validate_hm, term, rho, closed);
}

SeriesFamily golden_arctan(SeqKind kind)
{
    auto shape = [kind](const SeriesParams& p) {
        const Integer l = lucas(2 * p.r);
        Shape sh;
        sh.start = 0;
        sh.wn = 2;
        sh.wd = l;
        sh.step = [l](long j, Integer& num, Integer& den) {
            num *= 2 * (j + 1);
            den *= (2 * j + 3) * l;
        };
        sh.walk = true;
        sh.kind = kind;
        sh.k0 = p.s;
        sh.d = 2 * p.r;
        return sh;
    };
    auto term = [kind](long j, const SeriesParams& p) -> Rational {
        const Integer l = lucas(2 * p.r);
        const Integer num = pow(Integer(2), static_cast<unsigned long>(2 * j + 1)) * seq_value(kind, 2 * p.r * j + p.s);
        return make_rational(num, Integer(2 * j + 1) * central_binomial(j) * ipow(l, j + 1));
    };
    // weight ratio 2(j+1)/((2j+3) L_{2r}) < 1/L_{2r}
    auto rho = [kind](const SeriesParams& p, long j0) -> Rational {
        return walk_ratio(kind, p.s, 2 * p.r, j0) / Rational(lucas(2 * p.r));
    };
    auto closed = [kind](const SeriesParams& p, long prec) {
        const Ball half_pi = pi_ball(prec) / Rational(2);
        const Ball angle = atan(qb(QuadElement(0, Rational(fibonacci(2 * p.r), 2), 5), prec));
        if (kind == SeqKind::F) {
            return half_pi * Rational(fibonacci(p.s)) + qb(QuadElement(0, make_rational(lucas(p.s), 5), 5), prec) * angle;
        }
        return half_pi * Rational(lucas(p.s)) + qb(QuadElement(0, Rational(fibonacci(p.s)), 5), prec) * angle;
    };
    const std::string anchor =
        kind == SeqKind::F
            ? "sum 2^{2j+1} F_{2rj+s}/((2j+1) C(2j,j) L_{2r}^{j+1}) = (pi/2) F_s + (L_s/sqrt5) arctan(F_{2r} sqrt5/2)"
            : "sum 2^{2j+1} L_{2rj+s}/((2j+1) C(2j,j) L_{2r}^{j+1}) = (pi/2) L_s + F_s sqrt5 arctan(F_{2r} sqrt5/2)";
    return make_family(std::string("thm8.") + kind_name(kind), anchor, shape, [](const SeriesParams&) {}, term, rho,
                       closed);
}

void validate_noncentral(const SeriesParams& p)
{
    if (p.r % 2 != 0) {
        throw std::domain_error("non-central golden series needs even r, got " + std::to_string(p.r));
    }
    if (p.n < 1 || p.m < 0) {
        throw std::domain_error("non-central golden series needs n >= 1 and m >= 0");
    }
}

Ball noncentral_form(SeqKind kind, const SeriesParams& p, long prec, bool printed)
{
    const long n = p.n;
    const long m = p.m;
    const long r = p.r;
    const Rational lr(lucas(r));
    auto x = [kind](long j) { return Rational(seq_value(kind, j)); };
    Rational first = 0;
    for (long j = 1; j <= n - 1; ++j) {
        first += Rational(binomial(n - 1, j)) * minus_one_pow(j) * x(r * (n - j - 1))
                 / (j * pow(lr, n - j - 1) * Rational(binomial(m + j, j)));
    }
    Rational second = 0;
    for (long j = 1; j <= m; ++j) {
        const Integer b = printed ? binomial(m + j - 1, j) : binomial(n - 1 + j, j);
        second += Rational(binomial(m, j)) * minus_one_pow(j) * x(r * (n + j - 1)) / (j * pow(lr, n + j - 1) * Rational(b));
    }
    const Rational lead = pow(lr, n - 1);
    const Rational head = x(r * (n - 1)) / lead;
    const Rational exact = first - second + head * harmonic_block(n, m, printed);

    const Ball log_l = log(ball_from_rational(lr, prec));
    const Ball log_alpha = log(qb(golden_alpha(), prec));
    const Rational y(other_value(kind, r * (n - 1)));
    const QuadElement root_factor = kind == SeqKind::F ? QuadElement(0, Rational(1, 5), 5) : QuadElement(0, 1, 5);
    const Ball logs = (log_l * x(r * (n - 1)) - qb(root_factor, prec) * log_alpha * (r * y)) / lead;

    const int sign = kind == SeqKind::F ? minus_one_pow(n) : minus_one_pow(n - 1);
    return (ball_from_rational(exact, prec) + logs) * Rational(sign * n);
}

SeriesFamily noncentral(SeqKind kind)
{
    auto shape = [kind](const SeriesParams& p) {
        const Integer l = lucas(p.r);
        const long n = p.n;
        Shape sh;
        sh.start = p.m;
        sh.wn = 1;
        sh.wd = ipow(l, n + p.m) * binomial(n + p.m, p.m);
        sh.step = [l, n](long j, Integer& num, Integer& den) {
            num *= j + 1;
            den *= (n + j + 1) * l;
        };
        sh.walk = true;
        sh.kind = kind;
        sh.k0 = p.r * n;
        sh.d = p.r;
        return sh;
    };
    auto term = [kind](long j, const SeriesParams& p) -> Rational {
        return make_rational(seq_value(kind, p.r * (p.n + j)), ipow(lucas(p.r), p.n + j) * binomial(p.n + j, j));
    };
    // weight ratio (j+1)/((n+j+1) L_r) < 1/L_r
    auto rho = [kind](const SeriesParams& p, long j0) -> Rational {
        return walk_ratio(kind, p.r * p.n, p.r, j0) / Rational(lucas(p.r));
    };
    auto closed = [kind](const SeriesParams& p, long prec) { return noncentral_form(kind, p, prec, false); };
    const std::string x = kind_name(kind);
    return make_family("thm9." + x,
                       "sum_{j>=m} " + x + "_{r(n+j)}/(L_r^{n+j} C(n+j,j)), r even, via z = alpha^r/L_r, beta^r/L_r "
                                           "in the non-central binomial identity",
                       shape, validate_noncentral, term, rho, closed);
}

std::vector<SeriesFamily> build_families()
{
    std::vector<SeriesFamily> out;
    out.push_back(lehmer_asin());
    out.push_back(lehmer_asin_squared());
    out.push_back(lehmer_central());
    out.push_back(euler_atan());
    out.push_back(sury());
    out.push_back(hm_generating());
    for (const SeqKind kind : {SeqKind::F, SeqKind::L}) {
        out.push_back(shifted_recip_j(kind));
        out.push_back(nested_harmonic(kind));
        out.push_back(shifted_central(kind));
        out.push_back(golden_arctan(kind));
        out.push_back(noncentral(kind));
    }
    return out;
}

}  // namespace

Ball golden_cot(long prec) { return sqrt(qb(QuadElement(1, Rational(2, 5), 5), prec)); }

const std::vector<SeriesFamily>& series_families()
{
    static const std::vector<SeriesFamily> families = build_families();
    return families;
}

const SeriesFamily& series_family(std::string_view id)
{
    for (const auto& f : series_families()) {
        if (f.id == id) {
            return f;
        }
    }
    throw std::invalid_argument("unknown series family '" + std::string(id) + "'");
}

Ball partial_sum(const SeriesFamily& family, const SeriesParams& params, long N, long prec)
{
    auto stream = family.stream(params);
    if (N < stream->index()) {
        throw std::domain_error("partial sum end " + std::to_string(N) + " precedes the first index "
                                + std::to_string(stream->index()));
    }
    Ball sum(prec);
    while (stream->index() <= N) {
        sum += stream->next().to_ball(prec);
    }
    return sum;
}

Ball tail_bound(const SeriesFamily& family, const SeriesParams& params, long N, long prec)
{
    const long j0 = family.threshold(params);
    if (N < j0) {
        throw std::domain_error(family.id + ": no certified ratio below index " + std::to_string(j0));
    }
    const Rational rho = family.ratio_bound(params, N);
    if (rho >= 1) {
        throw std::domain_error(family.id + ": ratio bound " + to_string(rho) + " is not below 1 at index "
                                + std::to_string(N));
    }
    const Rational t = abs(family.term(N, params));
    return ball_from_rational(t * rho / (1 - rho), prec);
}

Ball closed_form(const SeriesFamily& family, const SeriesParams& params, long prec)
{
    return family.closed_form(params, prec);
}

SeriesOutcome verify_series(const SeriesFamily& family, const SeriesParams& params, const SeriesTarget& target,
                            const SeriesSettings& settings)
{
    if (settings.tol <= 0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (target.scale == 0) {
        throw std::invalid_argument("series scale must be nonzero");
    }
    family.validate(params);
    const long j_min = family.threshold(params);
    const Rational scale_abs = abs(target.scale);
    const Rational stop = settings.tol / (4 * scale_abs);

    SeriesOutcome out;
    for (long prec = settings.prec;; prec *= 2) {
        auto stream = family.stream(params);
        Ball sum(prec);
        Rational factor = -1;
        long next_check = j_min;
        long used = 0;
        bool converged = false;
        Rational tail = 0;
        while (used < settings.max_terms) {
            const long j = stream->index();
            const Ball t = stream->next().to_ball(prec);
            sum += t;
            ++used;
            if (j >= next_check) {
                const Rational rho = round_up(family.ratio_bound(params, j));
                factor = rho < 1 ? round_up(rho / (1 - rho)) : Rational(-1);
                next_check = std::max(j + 1, 2 * j);
            }
            if (factor >= 0) {
                tail = abs_upper(t) * factor;
                if (tail <= stop) {
                    converged = true;
                    break;
                }
            }
        }
        out.terms_used = used;
        out.prec_used = prec;
        if (!converged) {
            out.status = Status::inconclusive;
            out.sum = sum * target.scale;
            out.note = "certified tail not reached within " + std::to_string(settings.max_terms) + " terms";
            return out;
        }
        sum.add_error(tail);
        out.sum = sum * target.scale;
        out.tail = tail * scale_abs;
        try {
            out.target = target.value(prec);
        } catch (const PrecisionError& e) {
            out.status = Status::inconclusive;
            out.note = e.what();
            if (2 * prec <= settings.max_prec) {
                continue;
            }
            return out;
        }
        switch (ball_compare(out.sum, out.target, settings.tol)) {
        case Comparison::overlap_within_tol:
            out.status = Status::verified_numeric;
            out.note.clear();
            return out;
        case Comparison::disjoint_beyond_tol:
            out.status = Status::refuted;
            out.note.clear();
            return out;
        case Comparison::inconclusive:
            out.status = Status::inconclusive;
            out.note = "balls too wide at " + std::to_string(prec) + " bits";
            break;
        }
        if (2 * prec > settings.max_prec) {
            return out;
        }
    }
}

SeriesOutcome verify_series(const SeriesFamily& family, const SeriesParams& params, const SeriesSettings& settings)
{
    SeriesTarget target;
    target.value = [&family, &params](long prec) { return family.closed_form(params, prec); };
    return verify_series(family, params, target, settings);
}

Ball sury_printed_form(const SeriesParams& params, long prec)
{
    validate_sury(params);
    return sury_form(params, prec, true);
}

Ball noncentral_printed_form(SeqKind kind, const SeriesParams& params, long prec)
{
    validate_noncentral(params);
    return noncentral_form(kind, params, prec, true);
}

}  // namespace binetkit
