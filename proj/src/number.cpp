#include "binetkit/number.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace binetkit {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer pow(const Integer& x, unsigned long k)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), k);
    return out;
}

Rational pow(const Rational& x, long k)
{
    if (k < 0) {
        if (x == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        const unsigned long e = static_cast<unsigned long>(-(k + 1)) + 1;
        return make_rational(pow(x.get_den(), e), pow(x.get_num(), e));
    }
    const auto e = static_cast<unsigned long>(k);
    Rational out(pow(x.get_num(), e), pow(x.get_den(), e));
    return out;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        }
    }
    std::string digits(text);
    if (digits.front() == '+') {
        digits.erase(0, 1);
    }
    return Integer(digits, 10);
}

Rational parse_decimal(std::string_view text, std::string_view whole)
{
    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        const Integer ex = parse_integer(text.substr(e + 1), whole);
        if (!ex.fits_slong_p() || abs(ex) > 100000) {
            throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
        }
        exponent = ex.get_si();
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) {
                throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
            }
            seen_point = true;
            continue;
        }
        digits.push_back(c);
        if (seen_point) {
            ++frac_digits;
        }
    }
    if (digits.empty() || digits == "-" || digits == "+") {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    Rational value(parse_integer(digits, whole));
    value *= pow(Rational(10), exponent - frac_digits);
    value.canonicalize();
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash), text);
        const Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        }
        return make_rational(num, den);
    }
    if (text.find_first_of(".eE") != std::string_view::npos) {
        return parse_decimal(text, text);
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) {
        return x.get_num().get_str(10);
    }
    return x.get_str(10);
}

}  // namespace binetkit
