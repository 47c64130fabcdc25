#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binetkit/bigseq.hpp"
#include "binetkit/oeis.hpp"

#include <string>

using namespace binetkit;

TEST_CASE("b-file parsing")
{
    const BFile b = parse_bfile("# comment\n\n0 0\n1 1\r\n2 1\n3 2  # trailing comment\n", "A000045");
    REQUIRE(b.entries.size() == 4);
    CHECK(b.first_index() == 0);
    CHECK(b.last_index() == 3);
    CHECK(b.at(3) == 2);
    CHECK_THROWS_AS(b.at(4), std::out_of_range);

    const BFile neg = parse_bfile("-2 -1\n-1 1\n0 0\n");
    CHECK(neg.first_index() == -2);
    CHECK(neg.at(-2) == -1);

    CHECK(parse_bfile("5 123456789012345678901234567890\n").at(5)
          == Integer("123456789012345678901234567890"));
}

TEST_CASE("b-file errors name the line")
{
    try {
        parse_bfile("3 x\n");
        FAIL("expected an error");
    } catch (const BFileError& e) {
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).rfind("line 1:", 0) == 0);
    }
    try {
        parse_bfile("# header\n1 1\n1 2\n");
        FAIL("expected an error");
    } catch (const BFileError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_bfile("1\n"), BFileError);
    CHECK_THROWS_AS(parse_bfile("1 2 3\n"), BFileError);
    CHECK_THROWS_AS(parse_bfile("1.5 2\n"), BFileError);
    CHECK_THROWS_AS(parse_bfile("1 +2\n"), BFileError);
}

TEST_CASE("serialization round-trips")
{
    const BFile b = parse_bfile("# c\n0 2\n1 1\n2 3\n10 123\n");
    CHECK(serialize(b) == "0 2\n1 1\n2 3\n10 123\n");
    CHECK(parse_bfile(serialize(b)).entries == b.entries);
    const BFile f = load_fixture("A000045");
    CHECK(parse_bfile(serialize(f)).entries == f.entries);
}

TEST_CASE("A-number normalization")
{
    CHECK(normalize_anum("A000045") == "A000045");
    CHECK(normalize_anum("a45") == "A000045");
    CHECK(normalize_anum("45") == "A000045");
    CHECK(normalize_anum("b000032.txt") == "A000032");
    CHECK_THROWS_AS(normalize_anum("A12345678"), std::invalid_argument);
    CHECK_THROWS_AS(normalize_anum("Fib"), std::invalid_argument);
}

TEST_CASE("bundled fixtures agree with the generators")
{
    for (const char* a : {"A000045", "A000032", "A000129", "A001045", "A002450", "A014551"}) {
        CAPTURE(a);
        const BFile b = load_fixture(a);
        CHECK(b.first_index() == 0);
        CHECK(b.last_index() >= 50);
        const auto gen = generator_for(a);
        REQUIRE(gen.has_value());
        const auto r = cross_check(b, *gen, 0, 50);
        CHECK(r.status == Status::verified_exact);
        CHECK(r.terms_used == 51);
        CHECK(r.id == std::string("oeis.") + a);
    }
    CHECK(load_fixture("A000045").at(100) == Integer("354224848179261915075"));
    CHECK(load_fixture("A000032").at(10) == 123);
}

TEST_CASE("generators follow the sequence library")
{
    const auto f = named_generator("fibonacci");
    const auto p = named_generator("pell");
    const auto jl = named_generator("jacobsthal_lucas");
    for (long j = 0; j <= 30; ++j) {
        CHECK(f.value(j) == fibonacci(j));
    }
    CHECK(p.value(5) == 29);
    CHECK(jl.value(4) == 17);
    CHECK(named_generator("u5_4").value(3) == 21);
    CHECK_THROWS_AS(named_generator("tribonacci"), std::invalid_argument);
}

TEST_CASE("mismatches are refuted at the first index")
{
    const auto r = cross_check(load_fixture("A000045"), named_generator("lucas"), 0, 50);
    CHECK(r.status == Status::refuted);
    CHECK(r.note.find("index 0") != std::string::npos);
    CHECK_FALSE(r.as_expected());

    const BFile bad = parse_bfile("0 0\n1 1\n2 1\n3 2\n4 4\n");
    const auto r2 = cross_check(bad, named_generator("fibonacci"), 0, 4);
    CHECK(r2.status == Status::refuted);
    CHECK(r2.note.find("index 4") != std::string::npos);
    CHECK(cross_check(bad, named_generator("fibonacci"), 0, 3).status == Status::verified_exact);
}

TEST_CASE("missing fixtures and ranges")
{
    CHECK_THROWS_AS(load_fixture("A001582"), std::runtime_error);
    CHECK_FALSE(generator_for("A001582").has_value());
    const auto known = known_sequences();
    CHECK(std::find(known.begin(), known.end(), "A001582") != known.end());
    const BFile b = load_fixture("A000045");
    CHECK_THROWS_AS(cross_check(b, named_generator("fibonacci"), 0, b.last_index() + 1), std::out_of_range);
    CHECK_THROWS_AS(cross_check(b, named_generator("fibonacci"), -1, 5), std::out_of_range);
}
