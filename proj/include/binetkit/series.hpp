#pragma once

// Infinite series over reciprocal binomial coefficients: exact terms,
// certified geometric tail bounds and ball-valued closed forms.

#include "binetkit/ball.hpp"
#include "binetkit/finite_identities.hpp"
#include "binetkit/number.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace binetkit {

/// Parameters shared by all families; each family reads only what it needs.
/// The F/L choice is part of the family id.
struct SeriesParams {
    long s = 0;
    long r = 0;
    long m = 0;
    long n = 0;
    Rational z = 0;
};

/// A term num * factor / den, unreduced, den > 0. The factor is kept apart so
/// the big product is never formed when only a ball is needed.
struct ExactTerm {
    Integer num;
    Integer den;
    Integer factor = 1;

    Rational value() const;
    Ball to_ball(long prec) const;
};

/// Yields term(start), term(start + 1), ... in order.
class TermStream {
public:
    virtual ~TermStream() = default;
    /// Index of the term the next call to next() returns.
    virtual long index() const = 0;
    virtual ExactTerm next() = 0;
};

/// One parametrized series sum_{j >= start} term(j) with its closed form.
///
/// ratio_bound(p, j0) returns rho with |term(j+1)| <= rho |term(j)| for every
/// j >= j0; it is only defined for j0 >= threshold(p).
struct SeriesFamily {
    std::string id;
    std::string anchor;
    std::function<long(const SeriesParams&)> start;
    std::function<void(const SeriesParams&)> validate;
    std::function<Rational(long, const SeriesParams&)> term;
    std::function<std::unique_ptr<TermStream>(const SeriesParams&)> stream;
    std::function<long(const SeriesParams&)> threshold;
    std::function<Rational(const SeriesParams&, long)> ratio_bound;
    std::function<Ball(const SeriesParams&, long)> closed_form;
};

const std::vector<SeriesFamily>& series_families();

/// Throws std::invalid_argument for an unknown id.
const SeriesFamily& series_family(std::string_view id);

/// Nested harmonic weight: H_1(j) = 1/4, H_{m+1}(j) = sum_{k=1}^{j-1} H_m(k) / (2k)^2.
/// Throws std::domain_error unless m >= 1 and j >= 1.
Rational hm_weight(long m, long j);

/// Ball containing sum_{j=start}^{N} term(j).
Ball partial_sum(const SeriesFamily& family, const SeriesParams& params, long N, long prec);

/// Ball whose upper end bounds sum_{j>N} |term(j)|, from |term(N)| rho/(1 - rho).
/// Throws std::domain_error if N is below the family threshold or rho >= 1 there.
Ball tail_bound(const SeriesFamily& family, const SeriesParams& params, long N, long prec);

Ball closed_form(const SeriesFamily& family, const SeriesParams& params, long prec);

enum class Status { verified_exact, verified_numeric, refuted, inconclusive };

std::string to_string(Status s);

struct SeriesSettings {
    Rational tol = Rational(1, pow(Integer(10), 30UL));
    long prec = default_precision;
    long max_prec = 4096;
    long max_terms = 1000000;
};

/// What the series is compared against: scale * sum == value.
struct SeriesTarget {
    Rational scale = 1;
    std::function<Ball(long)> value;
};

struct SeriesOutcome {
    Status status = Status::inconclusive;
    /// scale * (partial sum + tail), tail folded into the radius.
    Ball sum;
    Ball target;
    Rational tail = 0;
    long terms_used = 0;
    long prec_used = 0;
    std::string note;
};

/// Sums until the certified tail (scaled) is at most tol/4, then compares the
/// enclosure of the full series with the target. Inconclusive comparisons are retried
/// at doubled precision up to settings.max_prec. Disjoint balls give refuted.
SeriesOutcome verify_series(const SeriesFamily& family, const SeriesParams& params, const SeriesTarget& target,
                            const SeriesSettings& settings);

/// Same, against the family's own closed form.
SeriesOutcome verify_series(const SeriesFamily& family, const SeriesParams& params, const SeriesSettings& settings);

/// Right-hand sides of the non-central identities with the harmonic block read
/// as an ordinary sum that is empty (zero) when m + 1 > n - 1; the golden-ratio
/// version also uses C(m+j-1, j) in its second sum.
Ball sury_printed_form(const SeriesParams& params, long prec);
Ball noncentral_printed_form(SeqKind kind, const SeriesParams& params, long prec);

/// Numeric value of a quadratic-field element.
inline Ball qb(const QuadElement& x, long prec) { return ball_from_quad(x, prec); }

/// sqrt(alpha^3 / sqrt 5) = cot(pi/5).
Ball golden_cot(long prec);

}  // namespace binetkit
