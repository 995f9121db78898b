#include "facpoly/rational.hpp"

#include "facpoly/errors.hpp"

#include <cctype>

namespace facpoly {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ValidationError("malformed rational '" + std::string(whole) + "'");
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1), whole).get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string digits(s.substr(0, dot));
    if (dot != std::string_view::npos) {
        auto frac = s.substr(dot + 1);
        digits += frac;
        exponent -= static_cast<long>(frac.size());
    }
    if (!all_digits(digits)) throw ValidationError("malformed rational '" + std::string(whole) + "'");
    Rational q{Integer(digits, 10)};
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
        q /= ten_pow;
    else
        q *= ten_pow;
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ValidationError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, text);
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    result.canonicalize();
    return result;
}

Rational factorial(unsigned long n) {
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Rational(z);
}

Rational binomial(unsigned long n, unsigned long k) {
    Integer z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Rational(z);
}

} // namespace facpoly
