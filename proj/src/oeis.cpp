#include "binetkit/oeis.hpp"

#include "binetkit/bigseq.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef BINETKIT_WITH_FETCH
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

#ifndef BINETKIT_FIXTURE_DIR
#define BINETKIT_FIXTURE_DIR "data/oeis"
#endif

namespace binetkit {

long BFile::first_index() const
{
    if (entries.empty()) {
        throw std::out_of_range(anum + ": empty b-file");
    }
    return entries.front().first;
}

long BFile::last_index() const
{
    if (entries.empty()) {
        throw std::out_of_range(anum + ": empty b-file");
    }
    return entries.back().first;
}

const Integer& BFile::at(long index) const
{
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, long i) { return e.first < i; });
    if (it == entries.end() || it->first != index) {
        throw std::out_of_range(anum + ": no entry for index " + std::to_string(index));
    }
    return it->second;
}

BFileError::BFileError(long line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

bool is_integer_token(std::string_view t)
{
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) {
        return false;
    }
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

BFile load_bfile(std::istream& in, std::string anum)
{
    BFile out;
    out.anum = std::move(anum);
    std::string line;
    long number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream fields(line);
        std::string index_text;
        if (!(fields >> index_text) || index_text[0] == '#') {
            continue;
        }
        std::string value_text;
        std::string extra;
        if (!(fields >> value_text)) {
            throw BFileError(number, "expected \"index value\", got \"" + line + "\"");
        }
        if (fields >> extra && extra[0] != '#') {
            throw BFileError(number, "unexpected trailing field \"" + extra + "\"");
        }
        if (!is_integer_token(index_text) || index_text.size() > 18) {
            throw BFileError(number, "bad index \"" + index_text + "\"");
        }
        if (!is_integer_token(value_text)) {
            throw BFileError(number, "bad value \"" + value_text + "\"");
        }
        const long index = std::stol(index_text);
        if (!out.entries.empty() && index <= out.entries.back().first) {
            throw BFileError(number, "index " + std::to_string(index) + " does not increase");
        }
        out.entries.emplace_back(index, Integer(value_text, 10));
    }
    return out;
}

BFile parse_bfile(std::string_view text, std::string anum)
{
    std::istringstream in{std::string(text)};
    return load_bfile(in, std::move(anum));
}

std::string serialize(const BFile& b)
{
    std::string out;
    for (const auto& [i, v] : b.entries) {
        out += std::to_string(i) + " " + v.get_str() + "\n";
    }
    return out;
}

std::string normalize_anum(std::string_view text)
{
    std::string t(text);
    if (t.size() > 4 && t.substr(t.size() - 4) == ".txt") {
        t.resize(t.size() - 4);
    }
    if (!t.empty() && (t[0] == 'A' || t[0] == 'a' || t[0] == 'b' || t[0] == 'B')) {
        t.erase(0, 1);
    }
    if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
        throw std::invalid_argument("not an OEIS A-number: '" + std::string(text) + "'");
    }
    return "A" + std::string(6 - t.size(), '0') + t;
}

std::filesystem::path fixture_dir()
{
    if (const char* env = std::getenv("BINETKIT_FIXTURES"); env != nullptr && *env != '\0') {
        return env;
    }
    return BINETKIT_FIXTURE_DIR;
}

BFile load_fixture(std::string_view anum)
{
    const std::string a = normalize_anum(anum);
    const std::filesystem::path path = fixture_dir() / ("b" + a.substr(1) + ".txt");
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("missing fixture for " + a + " (" + path.string() + ")");
    }
    try {
        return load_bfile(in, a);
    } catch (const BFileError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

namespace {

SequenceGenerator uv_generator(std::string name, long p, long q, bool second_kind)
{
    return {std::move(name), [p, q, second_kind](long j) {
                const LucasPair uv = lucas_uv(j, Rational(p), Rational(q));
                const Rational& x = second_kind ? uv.v : uv.u;
                if (!is_integer(x)) {
                    throw std::domain_error("non-integral sequence value at index " + std::to_string(j));
                }
                return Integer(x.get_num());
            }};
}

struct Mapping {
    const char* anum;
    const char* generator;
};

constexpr Mapping mappings[] = {
    {"A000045", "fibonacci"}, {"A000032", "lucas"},   {"A000129", "pell"},
    {"A001045", "jacobsthal"}, {"A002450", "u5_4"}, {"A014551", "jacobsthal_lucas"},
};

}  // namespace

SequenceGenerator named_generator(std::string_view name)
{
    if (name == "fibonacci") {
        return {"fibonacci", [](long j) { return fibonacci(j); }};
    }
    if (name == "lucas") {
        return {"lucas", [](long j) { return lucas(j); }};
    }
    if (name == "pell") {
        return uv_generator("pell", 2, -1, false);
    }
    if (name == "jacobsthal") {
        return uv_generator("jacobsthal", 1, -2, false);
    }
    if (name == "u5_4") {
        return uv_generator("u5_4", 5, 4, false);
    }
    if (name == "jacobsthal_lucas") {
        return uv_generator("jacobsthal_lucas", 1, -2, true);
    }
    throw std::invalid_argument("unknown generator '" + std::string(name)
                                + "' (fibonacci, lucas, pell, jacobsthal, u5_4, jacobsthal_lucas)");
}

std::optional<SequenceGenerator> generator_for(std::string_view anum)
{
    const std::string a = normalize_anum(anum);
    for (const auto& m : mappings) {
        if (a == m.anum) {
            return named_generator(m.generator);
        }
    }
    return std::nullopt;
}

std::vector<std::string> known_sequences()
{
    std::vector<std::string> out;
    for (const auto& m : mappings) {
        out.emplace_back(m.anum);
    }
    out.emplace_back("A001582");
    std::sort(out.begin(), out.end());
    return out;
}

VerificationRecord cross_check(const BFile& b, const SequenceGenerator& gen, long lo, long hi)
{
    if (lo > hi) {
        throw std::invalid_argument("empty index range");
    }
    if (b.entries.empty() || lo < b.first_index() || hi > b.last_index()) {
        throw std::out_of_range(b.anum + ": range " + std::to_string(lo) + ".." + std::to_string(hi)
                                + " leaves the fixture");
    }
    VerificationRecord r;
    r.id = "oeis." + b.anum;
    r.variant = gen.name;
    r.params = {{"lo", Rational(lo)}, {"hi", Rational(hi)}};
    r.anchor = b.anum + " b-file entries against the " + gen.name + " generator";
    r.status = Status::verified_exact;
    long checked = 0;
    for (const auto& [i, v] : b.entries) {
        if (i < lo || i > hi) {
            continue;
        }
        ++checked;
        const Integer g = gen.value(i);
        if (g != v) {
            r.status = Status::refuted;
            r.lhs = v.get_str();
            r.rhs = g.get_str();
            r.gap = Integer(v - g).get_str();
            r.note = "first mismatch at index " + std::to_string(i);
            break;
        }
    }
    if (r.status == Status::verified_exact) {
        r.lhs = b.at(hi).get_str();
        r.rhs = gen.value(hi).get_str();
        r.gap = "0";
        r.note = std::to_string(checked) + " entries match";
    }
    r.terms_used = checked;
    return r;
}

#ifdef BINETKIT_WITH_FETCH
BFile fetch_bfile(std::string_view anum)
{
    const std::string a = normalize_anum(anum);
    httplib::Client client("https://oeis.org");
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    auto res = client.Get("/" + a + "/b" + a.substr(1) + ".txt");
    if (!res || res->status != 200) {
        throw std::runtime_error("could not fetch b-file for " + a);
    }
    return parse_bfile(res->body, a);
}
#endif

}  // namespace binetkit
