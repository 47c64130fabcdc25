// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "binetkit/harness.hpp"
#include "binetkit/oeis.hpp"
#include "binetkit/series.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>

using namespace binetkit;

namespace {

constexpr long prec = 256;

Ball num(long x) { return ball_from_integer(Integer(x), prec); }
Ball q(long a, long b) { return ball_from_rational(Rational(a, b), prec); }
Ball sqrt5() { return sqrt(num(5)); }
Ball alpha() { return (num(1) + sqrt5()) / Rational(2); }
Ball pi() { return const_pi(prec); }

SeriesParams params(long s, long r = 0, long m = 0, long n = 0)
{
    SeriesParams p;
    p.s = s;
    p.r = r;
    p.m = m;
    p.n = n;
    return p;
}

Rational tol(const char* text) { return parse_rational(text); }

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// scale * sum_{family}(p) against an independently assembled constant.
void series_against(Check& c, const std::string& label, const std::string& family, const SeriesParams& p,
                    const Rational& scale, const Ball& value, const Rational& t, Status expected)
{
    SeriesSettings st;
    st.tol = t;
    st.prec = prec;
    const Ball v = value;
    const SeriesOutcome o = verify_series(series_family(family), p, SeriesTarget{scale, [v](long) { return v; }}, st);
    c.require(o.status == expected, label + ": " + to_string(o.status) + " (expected " + to_string(expected) + ")");
    if (expected == Status::verified_numeric) {
        c.require(o.tail > 0 || o.terms_used > 0, label + ": no tail certificate");
    }
}

void registry_expect(Check& c, const std::string& id, const ParamMap& pm, const Rational& t, Status expected,
                     const std::string& variant = "default")
{
    HarnessSettings hs;
    hs.tol = t;
    hs.prec = prec;
    const VerificationRecord r = verify_one(find_identity(id), pm, variant, hs);
    c.require(r.status == expected, id + ": " + to_string(r.status) + " (expected " + to_string(expected) + ")");
}

Check criterion1()
{
    Check c;
    std::vector<SweepJob> jobs;
    for (const auto& d : registry()) {
        if (d.mode == Mode::exact) {
            jobs.push_back(SweepJob{d.id, "default", {}});
        }
    }
    for (const char* id : {"eq1", "thm1.F", "thm1.L", "thm2.F", "thm2.L", "thm3.F", "thm3.L", "horadam.w",
                           "thm4.plain.F", "thm4.plain.L", "thm4.alt.F", "thm4.alt.L", "gould", "gould.quad"}) {
        c.require(find_identity(id).mode == Mode::exact, std::string(id) + " is not an exact identity");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto recs = sweep(jobs, HarnessSettings{});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::map<std::string, long> cells;
    long failures = 0;
    for (const auto& r : recs) {
        ++cells[r.id];
        if (r.status != Status::verified_exact) {
            ++failures;
            c.require(false, r.id + " " + params_string(r.params) + ": " + to_string(r.status));
        }
    }
    // n in [0,30], r in [-8,8], s in [-25,25]
    c.require(cells["eq1"] >= 31, "eq1 grid too small");
    for (const char* id : {"thm1.F", "thm1.L", "thm2.F", "thm2.L", "thm4.plain.F", "thm4.plain.L", "thm4.alt.F",
                           "thm4.alt.L"}) {
        c.require(cells[id] == 31 * 51, std::string(id) + " grid is not n 0..30 x s -25..25");
    }
    for (const char* id : {"thm3.F", "thm3.L"}) {
        c.require(cells[id] == 31 * 17 * 51, std::string(id) + " grid is not n 0..30 x r -8..8 x s -25..25");
    }
    c.require(cells["horadam.w"] > 0 && cells["gould"] > 0 && cells["gould.quad"] > 0, "missing finite ids");
    c.require(secs < 300, "runtime " + std::to_string(secs) + " s");
    if (c.ok) {
        c.detail = std::to_string(recs.size()) + " cells VERIFIED_EXACT in " + std::to_string(secs).substr(0, 5) + " s";
    }
    return c;
}

Check criterion2()
{
    Check c;
    const auto r = verify_one(find_identity("eq1"), {{"n", 2}}, "default", HarnessSettings{});
    c.require(r.status == Status::verified_exact, "status " + to_string(r.status));
    c.require(r.lhs == "5/2" && r.rhs == "5/2", "sides " + r.lhs + " and " + r.rhs);
    return c;
}

Check criterion3()
{
    Check c;
    const Ball pi2 = pi() * pi();
    series_against(c, "L m=1", "hm.L", params(0, 0, 1), 4, pi2 / Rational(5), tol("1e-30"), Status::verified_numeric);
    series_against(c, "F m=1", "hm.F", params(0, 0, 1), 4, pi2 * sqrt5() * Rational(4, 125), tol("1e-30"),
                   Status::verified_numeric);
    registry_expect(c, "ex.hm.L.m1.s0", {}, tol("1e-30"), Status::verified_numeric);
    registry_expect(c, "ex.hm.F.m1.s0", {}, tol("1e-30"), Status::verified_numeric);
    return c;
}

Check criterion4()
{
    Check c;
    series_against(c, "pi", "thm8.L", params(0, 0), 1, pi(), tol("1e-30"), Status::verified_numeric);
    registry_expect(c, "ex.thm8.L.r0.s0", {}, tol("1e-30"), Status::verified_numeric);
    return c;
}

Check criterion5()
{
    Check c;
    const Ball a = alpha();
    const Ball f = q(3, 5) + pi() * Rational(4, 25) * sqrt(pow(a, 5) / sqrt5());
    const Ball l = num(1) + pi() * Rational(4, 5) * sqrt(a / sqrt5());
    series_against(c, "F s=-1", "thm7.F", params(-1), 1, f, tol("1e-30"), Status::verified_numeric);
    series_against(c, "L s=-1", "thm7.L", params(-1), 1, l, tol("1e-30"), Status::verified_numeric);
    registry_expect(c, "ex.thm7.F.s-1", {}, tol("1e-30"), Status::verified_numeric);
    registry_expect(c, "ex.thm7.L.s-1", {}, tol("1e-30"), Status::verified_numeric);
    return c;
}

Check criterion6()
{
    Check c;
    const Ball f = atan(sqrt5() / Rational(2)) * Rational(2) / sqrt5();
    series_against(c, "L r=1", "thm8.L", params(0, 1), 1, pi(), tol("1e-30"), Status::verified_numeric);
    series_against(c, "F r=1", "thm8.F", params(0, 1), 1, f, tol("1e-30"), Status::verified_numeric);
    registry_expect(c, "ex.thm8.L.r1.s0", {}, tol("1e-30"), Status::verified_numeric);
    registry_expect(c, "ex.thm8.F.r1.s0", {}, tol("1e-30"), Status::verified_numeric);
    return c;
}

Check criterion7()
{
    Check c;
    const Ball pi4 = pow(pi(), 4);
    const Ball tenth4 = pow(pi() / Rational(10), 4);
    const Rational t = tol("1e-6");
    series_against(c, "printed F", "hm.F", params(0, 0, 2), 16, pi4 * sqrt5() * Rational(27, 25000), t,
                   Status::refuted);
    series_against(c, "printed L", "hm.L", params(0, 0, 2), 16, pi4 * Rational(41, 4100), t, Status::refuted);
    series_against(c, "derived F", "hm.F", params(0, 0, 2), 16, tenth4 * Rational(160, 3) / sqrt5(), t,
                   Status::verified_numeric);
    series_against(c, "derived L", "hm.L", params(0, 0, 2), 16, tenth4 * Rational(164, 3), t,
                   Status::verified_numeric);
    registry_expect(c, "ex.hm.F.m2.s0", {}, t, Status::refuted);
    registry_expect(c, "ex.hm.L.m2.s0", {}, t, Status::refuted);
    registry_expect(c, "ex.hm.F.m2.s0.derived", {}, t, Status::verified_numeric);
    registry_expect(c, "ex.hm.L.m2.s0.derived", {}, t, Status::verified_numeric);
    return c;
}

Check criterion8()
{
    Check c;
    const Ball target = log(alpha()) * Rational(4) / sqrt5();
    series_against(c, "F r=2 n=1 m=0", "thm9.F", params(0, 2, 0, 1), 1, target, tol("1e-20"),
                   Status::verified_numeric);
    registry_expect(c, "ex.thm9.F.r2.n1.m0", {}, tol("1e-20"), Status::verified_numeric);
    return c;
}

Check run_suite(const char* path, const char* filter)
{
    Check c;
    const std::string cmd = std::string("\"") + path + "\" --test-case='" + filter + "' --minimal > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    c.require(rc == 0, std::string(path) + " failed (status " + std::to_string(rc) + ")");
    return c;
}

Check criterion9()
{
    Check c = run_suite(BINETKIT_TEST_SERIES, "*");
    if (c.ok) {
        c = run_suite(BINETKIT_TEST_BALL, "*");
    }
    return c;
}

Check criterion10()
{
    Check c;
    for (const char* a : {"A000045", "A000032", "A000129", "A001045"}) {
        try {
            const auto gen = generator_for(a);
            c.require(gen.has_value(), std::string(a) + ": no generator");
            if (gen) {
                const auto r = cross_check(load_fixture(a), *gen, 0, 50);
                c.require(r.status == Status::verified_exact, std::string(a) + ": " + r.note);
            }
        } catch (const std::exception& e) {
            c.require(false, std::string(a) + ": " + e.what());
        }
    }
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"exact finite suite over the full grid", criterion1},
        {"eq1 at n=2 equals 5/2 on both sides", criterion2},
        {"m=1 harmonic series against pi^2/5 and 4 pi^2 sqrt5/125", criterion3},
        {"sum 2^{j+1}/((2j+1) C(2j,j)) against pi", criterion4},
        {"shifted central series at s=-1 for F and L", criterion5},
        {"golden arctan series at r=1 for L and F", criterion6},
        {"printed m=2 constants refuted, derived constants verified", criterion7},
        {"non-central series r=2 n=1 m=0 against (4/sqrt5) log alpha", criterion8},
        {"tail-bound and ball-containment suites", criterion9},
        {"OEIS fixtures cross-check over 0..50", criterion10},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
        if (!c.detail.empty()) {
            std::cout << " (" << c.detail << ")";
        }
        std::cout << "\n" << std::flush;
        failed += c.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
