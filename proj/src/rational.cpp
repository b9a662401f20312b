#include "polyspace/rational.hpp"

#include "polyspace/errors.hpp"

#include <cctype>

namespace polyspace {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// GMP's string constructor would read a leading zero as an octal prefix.
BigInt decimal_digits(std::string_view s)
{
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return BigInt{std::string(s)};
}

BigInt parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw DomainError("malformed integer '" + std::string(s) + "'");
    BigInt value = decimal_digits(s);
    return negative ? BigInt(-value) : value;
}

BigInt pow10(std::int64_t e)
{
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s)
{
    std::int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = s.substr(e + 1);
        exponent = static_cast<std::int64_t>(parse_integer(exp_text));
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    std::int64_t fraction_digits = 0;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        auto int_part = s.substr(0, dot);
        auto frac_part = s.substr(dot + 1);
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<std::int64_t>(frac_part.size());
        if (int_part.empty() && frac_part.empty()) digits.clear();
    }
    if (!all_digits(digits)) throw DomainError("malformed decimal '" + std::string(s) + "'");
    Rational value{decimal_digits(digits)};
    exponent -= fraction_digits;
    if (exponent >= 0)
        value *= Rational(pow10(exponent));
    else
        value /= Rational(pow10(-exponent));
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& value)
{
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits)
{
    const bool negative = value < 0;
    Rational magnitude = negative ? Rational(-value) : value;
    BigInt scale = pow10(digits);
    Rational scaled = magnitude * Rational(scale);
    BigInt num = numerator(scaled);
    BigInt den = denominator(scaled);
    BigInt q = num / den;
    BigInt r = num % den;
    if (2 * r >= den) q += 1;

    std::string s = q.str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits - static_cast<int>(s.size()) + 1), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && q != 0) s.insert(0, "-");
    return s;
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational pow2(std::int64_t exponent)
{
    BigInt p = 1;
    p <<= static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational pow(const Rational& base, std::uint32_t exponent)
{
    Rational result = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

} // namespace polyspace
