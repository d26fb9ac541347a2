#include "tbern/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tbern {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_canonical(const Rational& q)
{
    if (sgn(q.get_den()) <= 0) {
        return false;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer multinomial(unsigned long k, unsigned long l, unsigned long m)
{
    return binomial(k + l + m, k) * binomial(l + m, l);
}

Rational power(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero divisor");
        }
        return power(Rational(1) / base, -exponent);
    }
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return result;
}

long valuation(const Integer& value, unsigned long p)
{
    if (value == 0) {
        throw std::domain_error("valuation of zero");
    }
    Integer v = abs(value);
    long count = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++count;
    }
    return count;
}

} // namespace tbern
