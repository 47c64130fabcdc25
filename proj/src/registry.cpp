#include "binetkit/harness.hpp"

#include "binetkit/bigseq.hpp"
#include "binetkit/finite_identities.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace binetkit {

namespace {

long iv(const ParamMap& p, const std::string& k) { return p.at(k).get_num().get_si(); }

ParamSpec ispec(std::string name, long lo, long hi, std::optional<long> fallback, std::string help)
{
    ParamSpec s;
    s.name = std::move(name);
    s.integer = true;
    s.min = Rational(lo);
    s.max = Rational(hi);
    if (fallback) {
        s.fallback = Rational(*fallback);
    }
    s.help = std::move(help);
    return s;
}

ParamSpec qspec(std::string name, std::optional<Rational> fallback, std::string help)
{
    ParamSpec s;
    s.name = std::move(name);
    s.integer = false;
    s.fallback = std::move(fallback);
    s.help = std::move(help);
    return s;
}

std::vector<Rational> qs(std::initializer_list<const char*> texts)
{
    std::vector<Rational> out;
    for (const char* t : texts) {
        out.push_back(parse_rational(t));
    }
    return out;
}

const char* kind_name(SeqKind k) { return k == SeqKind::F ? "F" : "L"; }

// ---- records -------------------------------------------------------------------

template <class T>
VerificationRecord exact_record(const SidePair<T>& sides)
{
    VerificationRecord r;
    r.status = sides.equal ? Status::verified_exact : Status::refuted;
    r.lhs = to_string(sides.lhs);
    r.rhs = to_string(sides.rhs);
    const T gap = sides.lhs - sides.rhs;
    r.gap = to_string(gap);
    return r;
}

void fill_sides(VerificationRecord& r, const Ball& lhs, const Ball& rhs)
{
    r.lhs = mid_string(lhs);
    r.lhs_rad = rad_string(lhs);
    r.rhs = mid_string(rhs);
    r.rhs_rad = rad_string(rhs);
    r.gap = upper_decimal(abs(lhs.mid_q() - rhs.mid_q()));
}

SeriesSettings series_settings(const HarnessSettings& st)
{
    SeriesSettings s;
    s.tol = st.tol;
    s.prec = st.prec;
    s.max_prec = std::max(st.max_prec, st.prec);
    s.max_terms = st.max_terms;
    return s;
}

VerificationRecord series_record(const SeriesOutcome& o)
{
    VerificationRecord r;
    r.status = o.status;
    fill_sides(r, o.sum, o.target);
    r.prec = o.prec_used;
    r.terms_used = o.terms_used;
    r.note = o.note;
    return r;
}

// Compares two ball-valued sides, doubling precision while inconclusive.
VerificationRecord ball_record(const std::function<std::pair<Ball, Ball>(long)>& sides, const HarnessSettings& st)
{
    VerificationRecord r;
    for (long prec = st.prec;; prec *= 2) {
        const auto [lhs, rhs] = sides(prec);
        fill_sides(r, lhs, rhs);
        r.prec = prec;
        switch (ball_compare(lhs, rhs, st.tol)) {
        case Comparison::overlap_within_tol:
            r.status = Status::verified_numeric;
            return r;
        case Comparison::disjoint_beyond_tol:
            r.status = Status::refuted;
            return r;
        case Comparison::inconclusive:
            r.status = Status::inconclusive;
            r.note = "balls too wide at " + std::to_string(prec) + " bits";
            break;
        }
        if (2 * prec > std::max(st.max_prec, st.prec)) {
            return r;
        }
    }
}

SeriesParams to_series(const ParamMap& p)
{
    SeriesParams sp;
    if (auto it = p.find("s"); it != p.end()) {
        sp.s = it->second.get_num().get_si();
    }
    if (auto it = p.find("r"); it != p.end()) {
        sp.r = it->second.get_num().get_si();
    }
    if (auto it = p.find("m"); it != p.end()) {
        sp.m = it->second.get_num().get_si();
    }
    if (auto it = p.find("n"); it != p.end()) {
        sp.n = it->second.get_num().get_si();
    }
    if (auto it = p.find("z"); it != p.end()) {
        sp.z = it->second;
    }
    return sp;
}

// ---- exact identities ------------------------------------------------------------

using Runner = std::function<VerificationRecord(const ParamMap&, const std::string&, const HarnessSettings&)>;

IdentityDescriptor exact_identity(std::string id, std::vector<ParamSpec> schema, std::string anchor, Grid grid,
                                  Runner run)
{
    IdentityDescriptor d;
    d.id = std::move(id);
    d.mode = Mode::exact;
    d.schema = std::move(schema);
    d.anchor = std::move(anchor);
    d.grid = std::move(grid);
    d.run = std::move(run);
    return d;
}

ParamSpec n_spec() { return ispec("n", 0, 400, std::nullopt, "order of the binomial sum"); }
ParamSpec s_spec() { return ispec("s", -400, 400, 0, "index shift"); }
ParamSpec r_spec() { return ispec("r", -60, 60, 1, "index step"); }

GridBlock n_block() { return {axis("n", 0, 30)}; }
GridBlock ns_block() { return {axis("n", 0, 30), axis("s", -25, 25)}; }
GridBlock nrs_block() { return {axis("n", 0, 30), axis("r", -8, 8), axis("s", -25, 25)}; }

struct HoradamPair {
    HoradamTable w;
    HoradamTable v;
};

constexpr long horadam_window = 620;

const HoradamPair& horadam_tables(const HoradamParams& hp)
{
    static std::mutex mutex;
    static std::vector<std::pair<HoradamParams, std::unique_ptr<HoradamPair>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    for (const auto& [key, tables] : cache) {
        if (key == hp) {
            return *tables;
        }
    }
    const HoradamParams vp{2, hp.p, hp.p, hp.q};
    auto tables = std::make_unique<HoradamPair>(
        HoradamPair{HoradamTable(hp, -horadam_window, horadam_window), HoradamTable(vp, -horadam_window, horadam_window)});
    cache.emplace_back(hp, std::move(tables));
    return *cache.back().second;
}

HoradamParams horadam_of(const ParamMap& p) { return HoradamParams{p.at("a"), p.at("b"), p.at("p"), p.at("q")}; }

GridBlock horadam_block(const char* a, const char* b, const char* p, const char* q)
{
    GridBlock block = nrs_block();
    block.push_back(axis("a", qs({a})));
    block.push_back(axis("b", qs({b})));
    block.push_back(axis("p", qs({p})));
    block.push_back(axis("q", qs({q})));
    return block;
}

GridBlock quad_point(const char* za, const char* zb, long d)
{
    return {axis("n", 0, 15), axis("za", qs({za})), axis("zb", qs({zb})), axis("d", {Rational(d)})};
}

QuadElement quad_of(const ParamMap& p) { return QuadElement(p.at("za"), p.at("zb"), iv(p, "d")); }

void add_exact(std::vector<IdentityDescriptor>& out)
{
    out.push_back(exact_identity(
        "eq1", {n_spec()}, "sum_{j=0}^n 1/C(n,j) = (n+1)/2^{n+1} sum_{j=0}^n 2^{j+1}/(j+1)", {n_block()},
        [](const ParamMap& p, const std::string&, const HarnessSettings&) { return exact_record(eq1_sides(iv(p, "n"))); }));

    {
        IdentityDescriptor d = exact_identity(
            "gould", {n_spec(), qspec("z", std::nullopt, "rational point, z != -1")},
            "sum_{j=0}^n z^j/C(n,j) = (n+1) (z/(1+z))^n (1/(1+z)) sum_{j=0}^n (1+z^{j+1})/(j+1) ((1+z)/z)^j",
            {{axis("n", 0, 25), axis("z", qs({"-5/2", "-1/2", "0", "1/3", "2", "7/3"}))}},
            [](const ParamMap& p, const std::string&, const HarnessSettings&) {
                return exact_record(gould_check(p.at("z"), iv(p, "n")));
            });
        d.check = [](const ParamMap& p) {
            if (p.at("z") == -1) {
                throw std::invalid_argument("gould: z = -1 is excluded");
            }
        };
        out.push_back(std::move(d));
    }

    {
        IdentityDescriptor d = exact_identity(
            "gould.quad",
            {n_spec(), qspec("za", std::nullopt, "rational part of z"), qspec("zb", std::nullopt, "coefficient of sqrt(d)"),
             ispec("d", 2, 1000000, 5, "radicand")},
            "sum_{j=0}^n z^j/C(n,j) = (n+1) (z/(1+z))^n (1/(1+z)) sum (1+z^{j+1})/(j+1) ((1+z)/z)^j, z = za + zb sqrt(d)",
            {quad_point("1/2", "1/2", 5), quad_point("1/2", "-1/2", 5), quad_point("1/4", "1/4", 5),
             quad_point("-1/4", "1/4", 5), quad_point("2", "1", 5), quad_point("-2", "-1", 5),
             quad_point("7/2", "3/2", 5), quad_point("17", "12", 2)},
            [](const ParamMap& p, const std::string&, const HarnessSettings&) {
                return exact_record(gould_check(quad_of(p), iv(p, "n")));
            });
        d.check = [](const ParamMap& p) {
            const QuadElement w = quad_of(p) + Rational(1);
            if (w.a() == 0 && w.b() == 0) {
                throw std::invalid_argument("gould.quad: z = -1 is excluded");
            }
        };
        out.push_back(std::move(d));
    }

    for (const SeqKind kind : {SeqKind::F, SeqKind::L}) {
        const std::string x = kind_name(kind);
        out.push_back(exact_identity(
            "thm1." + x, {n_spec(), s_spec()},
            "sum_{j=0}^n " + x + "_{j+n+s}/C(n,j) = (n+1)/2^{n+1} sum_{j=0}^n 2^{j+1}(" + x + "_{j+s-2} + " + x
                + "_{2j+s-1})/(j+1)",
            {ns_block()}, [kind](const ParamMap& p, const std::string&, const HarnessSettings&) {
                return exact_record(thm1_sides(iv(p, "n"), iv(p, "s"), kind));
            }));

        IdentityDescriptor t2 = exact_identity(
            "thm2." + x, {n_spec(), s_spec()},
            "sum_{j=0}^{2n} " + x + "_{j+s}/(2^{j+1} C(2n,j)) = split sums over powers of 5 (default 2^{j+1} weight; "
                "paper-printed variant uses 2^{j+s})",
            {ns_block()}, [kind](const ParamMap& p, const std::string& variant, const HarnessSettings&) {
                const HalvedWeight w = variant == "paper-printed" ? HalvedWeight::printed : HalvedWeight::proof;
                return exact_record(thm2_sides(iv(p, "n"), iv(p, "s"), kind, w));
            });
        t2.variants = {"default", "paper-printed"};
        out.push_back(std::move(t2));

        out.push_back(exact_identity(
            "thm3." + x, {n_spec(), r_spec(), s_spec()},
            "sum_{j=0}^n (-1)^{rj} " + x + "_{2rj+s}/C(n,j) = (n+1) " + x
                + "_{rn+s}/L_r^{n+1} sum_{j=0}^n (-1)^{rj} L_r^j L_{r(j+1)}/(j+1)",
            {nrs_block()}, [kind](const ParamMap& p, const std::string&, const HarnessSettings&) {
                return exact_record(thm3_sides(iv(p, "n"), iv(p, "r"), iv(p, "s"), kind));
            }));

        for (const AltVariant alt : {AltVariant::plain, AltVariant::alternating}) {
            const bool plain = alt == AltVariant::plain;
            const std::string anchor =
                plain ? "sum_{j=0}^n " + x + "_{3j+s-n}/C(n,j) = (n+1)/2^{n+1} sum 2^j/(j+1) (" + x + "_{s+2j+1} + " + x
                            + "_{s-j-2})"
                      : "sum_{j=0}^n (-1)^j " + x + "_{3j+s-2n}/C(n,j) = (n+1)/2^{n+1} sum 2^j (-1)^j/(j+1) (" + x
                            + "_{s+j+2} + (-1)^{j-1} " + x + "_{s-2j-1})";
            out.push_back(exact_identity(std::string("thm4.") + (plain ? "plain." : "alt.") + x, {n_spec(), s_spec()},
                                         anchor, {ns_block()},
                                         [kind, alt](const ParamMap& p, const std::string&, const HarnessSettings&) {
                                             return exact_record(thm4_sides(iv(p, "n"), iv(p, "s"), alt, kind));
                                         }));
        }
    }

    {
        IdentityDescriptor d = exact_identity(
            "horadam.w",
            {n_spec(), r_spec(), s_spec(), qspec("a", Rational(0), "w_0"), qspec("b", Rational(1), "w_1"),
             qspec("p", Rational(1), "recurrence coefficient p"), qspec("q", Rational(-1), "recurrence coefficient q")},
            "sum_{j=0}^n w_{2rj+s}/(q^{rj} C(n,j)) = (n+1) w_{rn+s}/v_r^{n+1} sum_{j=0}^n v_r^j v_{r(j+1)}/(q^{rj}(j+1))",
            {horadam_block("0", "1", "1", "-1"), horadam_block("2", "1", "1", "-1"), horadam_block("0", "1", "2", "-1"),
             horadam_block("0", "1", "1", "-2"), horadam_block("1", "3", "3", "1")},
            [](const ParamMap& p, const std::string&, const HarnessSettings&) {
                const long n = iv(p, "n");
                const long r = iv(p, "r");
                const long s = iv(p, "s");
                const HoradamParams hp = horadam_of(p);
                const long reach = std::max(std::labs(2 * r * n) + std::labs(s), std::labs(r) * (n + 1)) + 2;
                if (reach > horadam_window) {
                    return exact_record(horadam_sides(n, r, s, hp));
                }
                const HoradamPair& t = horadam_tables(hp);
                return exact_record(horadam_sides(n, r, s, t.w, t.v));
            });
        d.check = [](const ParamMap& p) {
            const HoradamParams hp = horadam_of(p);
            if (hp.q == 0) {
                throw std::invalid_argument("horadam.w: q must be nonzero");
            }
            if (hp.discriminant() <= 0) {
                throw std::invalid_argument("horadam.w: needs p^2 - 4q > 0");
            }
            if (hp.p == 0 && iv(p, "r") % 2 != 0) {
                throw std::invalid_argument("horadam.w: v_r vanishes for p = 0 and odd r");
            }
        };
        out.push_back(std::move(d));
    }

    const QuadElement alpha = golden_alpha();
    const QuadElement beta = golden_beta();
    const QuadElement root5(0, 1, 5);
    auto sign_spec = [] { return ispec("e", -1, 1, 1, "+1 for the difference, -1 for the sum"); };
    auto sign_check = [](const ParamMap& p) {
        if (p.at("e") == 0) {
            throw std::invalid_argument("e must be +1 or -1");
        }
    };

    {
        IdentityDescriptor d = exact_identity(
            "golden.cubic", {ispec("r", -200, 200, 0, "exponent"), sign_spec()},
            "3 alpha^r - beta^{r+3} = L_{r+1} sqrt5 - L_{r-1};  3 alpha^r + beta^{r+3} = sqrt5 (F_{r+1} sqrt5 - F_{r-1})",
            {{axis("r", -30, 30), axis("e", {Rational(-1), Rational(1)})}},
            [=](const ParamMap& p, const std::string&, const HarnessSettings&) {
                const long r = iv(p, "r");
                const Rational e = p.at("e");
                const QuadElement lhs = Rational(3) * pow(alpha, r) - e * pow(beta, r + 3);
                const QuadElement rhs = e == 1 ? Rational(lucas(r + 1)) * root5 - Rational(lucas(r - 1))
                                               : root5 * (Rational(fibonacci(r + 1)) * root5 - Rational(fibonacci(r - 1)));
                return exact_record(make_sides(lhs, rhs));
            });
        d.check = sign_check;
        out.push_back(std::move(d));
    }
    {
        IdentityDescriptor d = exact_identity(
            "golden.sextic", {ispec("r", -200, 200, 0, "exponent"), sign_spec()},
            "alpha^r - beta^{r+6} = -beta^3 L_{r+3};  alpha^r + beta^{r+6} = -beta^3 F_{r+3} sqrt5",
            {{axis("r", -30, 30), axis("e", {Rational(-1), Rational(1)})}},
            [=](const ParamMap& p, const std::string&, const HarnessSettings&) {
                const long r = iv(p, "r");
                const Rational e = p.at("e");
                const QuadElement beta3 = pow(beta, 3);
                const QuadElement lhs = pow(alpha, r) - e * pow(beta, r + 6);
                const QuadElement rhs = e == 1 ? -beta3 * Rational(lucas(r + 3))
                                               : -beta3 * Rational(fibonacci(r + 3)) * root5;
                return exact_record(make_sides(lhs, rhs));
            });
        d.check = sign_check;
        out.push_back(std::move(d));
    }
    out.push_back(exact_identity(
        "golden.fg", {ispec("s", -200, 200, 0, "exponent"), qspec("f", std::nullopt, ""), qspec("g", std::nullopt, "")},
        "f alpha^s + g beta^s = (f + g) L_s/2 + (f - g) F_s sqrt5/2",
        {{axis("s", -20, 20), axis("f", qs({"-3/7", "0", "1", "5/2"})), axis("g", qs({"-3/7", "0", "1", "5/2"}))}},
        [=](const ParamMap& p, const std::string&, const HarnessSettings&) {
            const long s = iv(p, "s");
            const Rational f = p.at("f");
            const Rational g = p.at("g");
            const QuadElement lhs = pow(alpha, s) * f + pow(beta, s) * g;
            const QuadElement rhs =
                QuadElement(Rational(lucas(s)) * (f + g) / 2, 5) + Rational(fibonacci(s)) * Rational((f - g) / 2) * root5;
            return exact_record(make_sides(lhs, rhs));
        }));
}

// ---- series identities -----------------------------------------------------------

Ball pi(long prec) { return const_pi(prec); }

Ball q(const QuadElement& x, long prec) { return qb(x, prec); }

Ball sqrt_q(const char* a, const char* b, long prec)
{
    return sqrt(qb(QuadElement(parse_rational(a), parse_rational(b), 5), prec));
}

// Closed forms as printed for the nested-harmonic sums at m = 1, 2, with the
// printed inner weights (4^m H_m).
Ball hm_printed(SeqKind kind, long m, long s, long prec)
{
    const Ball p2 = pi(prec) * pi(prec);
    const QuadElement as = QuadElement(Rational(lucas(s), 2), Rational(fibonacci(s), 2), 5);
    const Rational ls(lucas(s));
    const QuadElement root5(0, 1, 5);
    if (m == 1) {
        if (s == 0) {
            return kind == SeqKind::F ? p2 * q(root5, prec) * Rational(4, 125) : p2 / Rational(5);
        }
        if (kind == SeqKind::F) {
            return p2 / (q(root5, prec) * Rational(5)) * q(as - ls / 10, prec);
        }
        return p2 * Rational(2, 25) * q(Rational(2) * as + ls / 4, prec);
    }
    const Ball p4 = p2 * p2;
    if (s == 0) {
        return kind == SeqKind::F ? p4 * q(root5, prec) * Rational(27, 25000) : p4 * Rational(41, 4100);
    }
    const Rational c = Rational(2, 3) / 10000;
    if (kind == SeqKind::F) {
        return p4 * c / q(root5, prec) * q(Rational(82) * as - ls, prec);
    }
    return p4 * c * q(Rational(80) * as + ls, prec);
}

struct FamilyLayout {
    std::vector<ParamSpec> schema;
    Grid grid;
    std::vector<std::string> variants{"default"};
};

FamilyLayout layout_of(const std::string& id)
{
    const ParamSpec s = ispec("s", -200, 200, 0, "index shift");
    const ParamSpec m_hm = ispec("m", 1, 12, 1, "nesting depth of the harmonic weight");
    if (id == "lehmer.asin" || id == "lehmer.asin2" || id == "lehmer.central") {
        return {{qspec("z", Rational(1, 2), "|z| < 1")}, {{axis("z", qs({"-9/10", "-1/2", "1/3", "1/2", "4/5"}))}}};
    }
    if (id == "euler.atan") {
        return {{qspec("z", Rational(1), "any rational")}, {{axis("z", qs({"-3", "-1", "1/2", "1", "2", "10"}))}}};
    }
    if (id == "sury") {
        return {{qspec("z", Rational(1, 3), "|z| < 1"), ispec("n", 1, 200, 1, "offset"), ispec("m", 0, 200, 0, "first index")},
                {{axis("z", qs({"1/3", "-1/2"})), axis("n", 1, 4), axis("m", 0, 3)}},
                {"default", "paper-printed"}};
    }
    if (id == "hm.gen") {
        return {{qspec("z", Rational(1), "|z| < 2"), m_hm}, {{axis("z", qs({"-1/2", "1", "3/2"})), axis("m", 1, 3)}}};
    }
    if (id == "hm.F" || id == "hm.L") {
        return {{m_hm, s}, {{axis("m", 1, 3), axis("s", -5, 5)}}, {"default", "paper-printed"}};
    }
    if (id.rfind("thm8.", 0) == 0) {
        return {{ispec("r", -6, 6, 1, "index step"), ispec("s", -200, 200, 0, "index shift")},
                {{axis("r", -3, 3), axis("s", -4, 4)}}};
    }
    if (id.rfind("thm9.", 0) == 0) {
        return {{ispec("r", -8, 8, 2, "even index step"), ispec("n", 1, 60, 1, "offset"), ispec("m", 0, 60, 0, "first index")},
                {{axis("r", {Rational(-4), Rational(-2), Rational(0), Rational(2), Rational(4)}), axis("n", 1, 4),
                  axis("m", 0, 3)}},
                {"default", "paper-printed"}};
    }
    return {{s}, {{axis("s", -5, 5)}}};
}

IdentityDescriptor family_identity(const SeriesFamily& f)
{
    FamilyLayout lay = layout_of(f.id);
    IdentityDescriptor d;
    d.id = f.id;
    d.mode = Mode::series;
    d.schema = std::move(lay.schema);
    d.grid = std::move(lay.grid);
    d.variants = std::move(lay.variants);
    d.anchor = f.anchor;
    const std::string id = f.id;
    d.check = [id](const ParamMap& p) {
        try {
            series_family(id).validate(to_series(p));
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(id + ": " + e.what());
        }
    };
    if (id == "hm.F" || id == "hm.L") {
        d.expect_refuted = [](const ParamMap& p, const std::string& variant) {
            return variant == "paper-printed" && p.at("m") == 2 && p.at("s") == 0;
        };
    }
    d.run = [id](const ParamMap& p, const std::string& variant, const HarnessSettings& st) {
        const SeriesFamily& fam = series_family(id);
        const SeriesParams sp = to_series(p);
        const SeriesSettings ss = series_settings(st);
        if (variant != "paper-printed") {
            return series_record(verify_series(fam, sp, ss));
        }
        SeriesTarget target;
        if (id == "sury") {
            target.value = [sp](long prec) { return sury_printed_form(sp, prec); };
        } else if (id == "thm9.F" || id == "thm9.L") {
            const SeqKind kind = id == "thm9.F" ? SeqKind::F : SeqKind::L;
            target.value = [sp, kind](long prec) { return noncentral_printed_form(kind, sp, prec); };
        } else {
            if (sp.m > 2) {
                VerificationRecord r;
                r.status = Status::inconclusive;
                r.note = "no printed closed form for m > 2";
                return r;
            }
            const SeqKind kind = id == "hm.F" ? SeqKind::F : SeqKind::L;
            target.scale = Rational(pow(Integer(4), static_cast<unsigned long>(sp.m)));
            target.value = [sp, kind](long prec) { return hm_printed(kind, sp.m, sp.s, prec); };
        }
        return series_record(verify_series(fam, sp, target, ss));
    };
    return d;
}

IdentityDescriptor series_check(std::string id, std::vector<ParamSpec> schema, std::string anchor, Grid grid, Runner run)
{
    IdentityDescriptor d = exact_identity(std::move(id), std::move(schema), std::move(anchor), std::move(grid), std::move(run));
    d.mode = Mode::series;
    return d;
}

void add_series(std::vector<IdentityDescriptor>& out)
{
    for (const auto& f : series_families()) {
        out.push_back(family_identity(f));
    }

    for (const SeqKind kind : {SeqKind::F, SeqKind::L}) {
        const std::string x = kind_name(kind);
        out.push_back(series_check(
            "thm5.shift." + x, {ispec("s", -200, 200, 0, "index shift")},
            "sum " + x + "_{2j+s}/(j C(2j,j)) = (" + x + "_{s+1} sqrt5 - " + x + "_{s-1}) sum F_{2j-1}/(j C(2j,j))",
            {{axis("s", -5, 5)}}, [kind](const ParamMap& p, const std::string&, const HarnessSettings& st) {
                const long s = iv(p, "s");
                const SeriesFamily& fam = series_family(kind == SeqKind::F ? "thm5.F" : "thm5.L");
                const QuadElement c(-Rational(seq_value(kind, s - 1)), Rational(seq_value(kind, s + 1)), 5);
                SeriesTarget target;
                // the s = -1 Fibonacci sum, as printed
                target.value = [c](long prec) { return q(c, prec) * pi(prec) / Rational(5) * sqrt_q("1", "2/5", prec); };
                SeriesParams sp;
                sp.s = s;
                return series_record(verify_series(fam, sp, target, series_settings(st)));
            }));
    }

    out.push_back(series_check(
        "golden.angles", {ispec("k", 1, 4, 1, "which relation")},
        "k=1: arccos(alpha/2) = pi/5;  k=2: arccos(-beta/2) = 2pi/5;  k=3: cot(2pi/5) = -beta^3 cot(pi/5);  "
        "k=4: cot(pi/5) = sqrt(alpha^3/sqrt5)",
        {{axis("k", 1, 4)}}, [](const ParamMap& p, const std::string&, const HarnessSettings& st) {
            const long k = iv(p, "k");
            const QuadElement alpha = golden_alpha();
            const QuadElement beta = golden_beta();
            return ball_record(
                [k, alpha, beta](long prec) -> std::pair<Ball, Ball> {
                    const Ball pi5 = pi(prec) / Rational(5);
                    switch (k) {
                    case 1:
                        return {acos(q(alpha / Rational(2), prec)), pi5};
                    case 2:
                        return {acos(q(-beta / Rational(2), prec)), pi5 * Rational(2)};
                    case 3:
                        return {cot(pi5 * Rational(2)), -q(pow(beta, 3), prec) * cot(pi5)};
                    default:
                        return {cot(pi5), sqrt_q("1", "2/5", prec)};
                    }
                },
                st);
        }));

    {
        IdentityDescriptor d = series_check(
            "golden.atan", {ispec("r", -40, 40, 1, "exponent"), ispec("e", -1, 1, 1, "-1 for the sum, +1 for the difference")},
            "arctan(alpha^{2r}) + arctan(beta^{2r}) = pi/2;  arctan(alpha^{2r}) - arctan(beta^{2r}) = arctan(F_{2r} sqrt5/2)",
            {{axis("r", -5, 5), axis("e", {Rational(-1), Rational(1)})}},
            [](const ParamMap& p, const std::string&, const HarnessSettings& st) {
                const long r = iv(p, "r");
                const bool diff = p.at("e") == 1;
                return ball_record(
                    [r, diff](long prec) -> std::pair<Ball, Ball> {
                        const Ball a = atan(q(pow(golden_alpha(), 2 * r), prec));
                        const Ball b = atan(q(pow(golden_beta(), 2 * r), prec));
                        if (!diff) {
                            return {a + b, pi(prec) / Rational(2)};
                        }
                        return {a - b, atan(q(QuadElement(0, Rational(fibonacci(2 * r), 2), 5), prec))};
                    },
                    st);
            });
        d.check = [](const ParamMap& p) {
            if (p.at("e") == 0) {
                throw std::invalid_argument("golden.atan: e must be +1 or -1");
            }
        };
        out.push_back(std::move(d));
    }

    for (const auto& c : printed_constants()) {
        IdentityDescriptor d;
        d.id = c.id;
        d.mode = Mode::series;
        d.anchor = c.formula;
        d.grid = {GridBlock{}};
        const bool refuted = c.expect_refuted;
        d.expect_refuted = [refuted](const ParamMap&, const std::string&) { return refuted; };
        const PrintedConstant* pc = &c;
        d.run = [pc](const ParamMap&, const std::string&, const HarnessSettings& st) {
            SeriesTarget target;
            target.scale = pc->scale;
            target.value = pc->value;
            return series_record(verify_series(series_family(pc->family), pc->params, target, series_settings(st)));
        };
        out.push_back(std::move(d));
    }
}

std::vector<IdentityDescriptor> build_registry()
{
    std::vector<IdentityDescriptor> out;
    add_exact(out);
    add_series(out);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (out[i].id == out[j].id) {
                throw std::logic_error("duplicate identity id " + out[i].id);
            }
        }
    }
    return out;
}

SeriesParams at(long s, long r = 0, long m = 0, long n = 0)
{
    SeriesParams p;
    p.s = s;
    p.r = r;
    p.m = m;
    p.n = n;
    return p;
}

PrintedConstant constant(std::string id, std::string family, SeriesParams params, Rational scale, std::string formula,
                         std::function<Ball(long)> value, bool expect_refuted = false)
{
    return PrintedConstant{std::move(id),    std::move(family), params, std::move(scale), std::move(formula),
                           std::move(value), expect_refuted};
}

std::vector<PrintedConstant> build_constants()
{
    const QuadElement root5(0, 1, 5);
    std::vector<PrintedConstant> c;
    // reciprocal-j central sums
    c.push_back(constant("ex.thm5.F.s-3", "thm5.F", at(-3), 1, "sum F_{2j-3}/(j C(2j,j)) = (2pi/5) sqrt(-beta/sqrt5)",
                         [](long p) { return pi(p) * Rational(2, 5) * sqrt_q("1/2", "-1/10", p); }));
    c.push_back(constant("ex.thm5.F.s-1", "thm5.F", at(-1), 1, "sum F_{2j-1}/(j C(2j,j)) = (pi/5) sqrt(alpha^3/sqrt5)",
                         [](long p) { return pi(p) / Rational(5) * sqrt_q("1", "2/5", p); }));
    c.push_back(constant("ex.thm5.F.s0", "thm5.F", at(0), 1, "sum F_{2j}/(j C(2j,j)) = (2pi/5) sqrt(alpha/sqrt5)",
                         [](long p) { return pi(p) * Rational(2, 5) * sqrt_q("1/2", "1/10", p); }));
    c.push_back(constant("ex.thm5.L.s0", "thm5.L", at(0), 1, "sum L_{2j}/(j C(2j,j)) = (2pi/5) sqrt(alpha^5/sqrt5)",
                         [](long p) { return pi(p) * Rational(2, 5) * sqrt_q("5/2", "11/10", p); }));
    // squared reciprocal sums, m = 1 carries weight 1 = 4 H_1
    c.push_back(constant("ex.hm.F.m1.s0", "hm.F", at(0, 0, 1), 4, "sum F_{2j}/(j^2 C(2j,j)) = 4 pi^2 sqrt5/125",
                         [root5](long p) { return pi(p) * pi(p) * q(root5, p) * Rational(4, 125); }));
    c.push_back(constant("ex.hm.L.m1.s0", "hm.L", at(0, 0, 1), 4, "sum L_{2j}/(j^2 C(2j,j)) = pi^2/5",
                         [](long p) { return pi(p) * pi(p) / Rational(5); }));
    c.push_back(constant("ex.hm.L.m1.s3", "hm.L", at(3, 0, 1), 4, "sum L_{2j+3}/(j^2 C(2j,j)) = (2pi^2/25)(5 + 2 sqrt5)",
                         [](long p) { return pi(p) * pi(p) * Rational(2, 25) * q(QuadElement(5, 2, 5), p); }));
    c.push_back(constant("ex.hm.L.m1.s-3", "hm.L", at(-3, 0, 1), 4, "sum L_{2j-3}/(j^2 C(2j,j)) = (2pi^2/25)(2 sqrt5 - 5)",
                         [](long p) { return pi(p) * pi(p) * Rational(2, 25) * q(QuadElement(-5, 2, 5), p); }));
    // inner weight sum_{k<j} 1/k^2 = 16 H_2(j)
    c.push_back(constant("ex.hm.F.m2.s0", "hm.F", at(0, 0, 2), 16,
                         "sum (sum_{k<j} 1/k^2) F_{2j}/(j^2 C(2j,j)) = 27 pi^4 sqrt5/25000 (as printed)",
                         [root5](long p) { return pow(pi(p), 4) * q(root5, p) * Rational(27, 25000); }, true));
    c.push_back(constant("ex.hm.L.m2.s0", "hm.L", at(0, 0, 2), 16,
                         "sum (sum_{k<j} 1/k^2) L_{2j}/(j^2 C(2j,j)) = 41 pi^4/4100 (as printed)",
                         [](long p) { return pow(pi(p), 4) * Rational(41, 4100); }, true));
    c.push_back(constant("ex.hm.F.m2.s0.derived", "hm.F", at(0, 0, 2), 16,
                         "sum (sum_{k<j} 1/k^2) F_{2j}/(j^2 C(2j,j)) = (pi/10)^4 (2/(3 sqrt5)) 80 = 2 sqrt5 pi^4/1875",
                         [root5](long p) { return pow(pi(p), 4) * q(root5, p) * Rational(2, 1875); }));
    c.push_back(constant("ex.hm.L.m2.s0.derived", "hm.L", at(0, 0, 2), 16,
                         "sum (sum_{k<j} 1/k^2) L_{2j}/(j^2 C(2j,j)) = (pi/10)^4 (2/3) 82",
                         [](long p) { return pow(pi(p), 4) * Rational(164, 30000); }));
    // central sums
    c.push_back(constant("ex.thm7.F.s0", "thm7.F", at(0), 1,
                         "sum F_{2j}/C(2j,j) = 4/5 + (2pi/25)(3 - (2/5) sqrt5) sqrt(5 + 2 sqrt5)", [](long p) {
                             return ball_from_rational(Rational(4, 5), p)
                                    + pi(p) * Rational(2, 25) * q(QuadElement(3, Rational(-2, 5), 5), p) * sqrt_q("5", "2", p);
                         }));
    c.push_back(constant("ex.thm7.L.s0", "thm7.L", at(0), 1, "sum L_{2j}/C(2j,j) = 2 + (2pi/5) sqrt(5 + 2 sqrt5)",
                         [](long p) { return ball_from_rational(2, p) + pi(p) * Rational(2, 5) * sqrt_q("5", "2", p); }));
    c.push_back(constant("ex.thm7.F.s-1", "thm7.F", at(-1), 1, "sum F_{2j-1}/C(2j,j) = 3/5 + (4pi/25) sqrt(alpha^5/sqrt5)",
                         [](long p) {
                             return ball_from_rational(Rational(3, 5), p) + pi(p) * Rational(4, 25) * sqrt_q("5/2", "11/10", p);
                         }));
    c.push_back(constant("ex.thm7.L.s-1", "thm7.L", at(-1), 1, "sum L_{2j-1}/C(2j,j) = 1 + (4pi/5) sqrt(alpha/sqrt5)",
                         [](long p) { return ball_from_rational(1, p) + pi(p) * Rational(4, 5) * sqrt_q("1/2", "1/10", p); }));
    c.push_back(constant("ex.thm7.L.s-2", "thm7.L", at(-2), 1, "sum L_{2j-2}/C(2j,j) = 1 + (2pi/5) sqrt(alpha^3/sqrt5)",
                         [](long p) { return ball_from_rational(1, p) + pi(p) * Rational(2, 5) * sqrt_q("1", "2/5", p); }));
    c.push_back(constant("ex.thm7.L.s-3", "thm7.L", at(-3), 1, "sum L_{2j-3}/C(2j,j) = (2pi/5) sqrt(1 - (2/5) sqrt5)",
                         [](long p) { return pi(p) * Rational(2, 5) * sqrt_q("1", "-2/5", p); }));
    // arctangent sums
    c.push_back(constant("ex.thm8.L.r0.s0", "thm8.L", at(0, 0), 1, "sum 2^{j+1}/((2j+1) C(2j,j)) = pi",
                         [](long p) { return pi(p); }));
    c.push_back(constant("ex.thm8.F.r1.s0", "thm8.F", at(0, 1), 1,
                         "sum 2^{2j+1} F_{2j}/((2j+1) C(2j,j) 3^{j+1}) = (2/sqrt5) arctan(sqrt5/2)", [](long p) {
                             return q(QuadElement(0, Rational(2, 5), 5), p) * atan(q(QuadElement(0, Rational(1, 2), 5), p));
                         }));
    c.push_back(constant("ex.thm8.L.r1.s0", "thm8.L", at(0, 1), 1, "sum 2^{2j+1} L_{2j}/((2j+1) C(2j,j) 3^{j+1}) = pi",
                         [](long p) { return pi(p); }));
    // non-central
    c.push_back(constant("ex.thm9.F.r2.n1.m0", "thm9.F", at(0, 2, 0, 1), 1,
                         "sum_{j>=0} F_{2j+2}/(3^{j+1} (j+1)) = (4/sqrt5) log(alpha)", [](long p) {
                             return q(QuadElement(0, Rational(4, 5), 5), p) * log(q(golden_alpha(), p));
                         }));
    return c;
}

}  // namespace

const std::vector<PrintedConstant>& printed_constants()
{
    static const std::vector<PrintedConstant> constants = build_constants();
    return constants;
}

const std::vector<IdentityDescriptor>& registry()
{
    static const std::vector<IdentityDescriptor> descriptors = build_registry();
    return descriptors;
}

}  // namespace binetkit
