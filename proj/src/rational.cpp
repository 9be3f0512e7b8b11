#include "subseq/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "subseq/errors.hpp"

namespace subseq {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) {
        throw InvalidInput("not a number: '" + std::string(whole) + "'");
    }
    mpz_class v(std::string(text), 10);
    return negative ? mpz_class(-v) : v;
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0) {
        throw InvalidInput("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw InvalidInput("empty number");
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_integer(text.substr(0, slash), whole),
                        parse_integer(text.substr(slash + 1), whole));
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class ev = parse_integer(text.substr(e + 1), whole);
        if (!ev.fits_slong_p() || ev > 4096 || ev < -4096) {
            throw InvalidInput("exponent out of range: '" + std::string(whole) + "'");
        }
        exponent = ev.get_si();
        text = text.substr(0, e);
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto ip = text.substr(0, dot);
        const auto fp = text.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp))) {
            throw InvalidInput("not a number: '" + std::string(whole) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(text)) {
            throw InvalidInput("not a number: '" + std::string(whole) + "'");
        }
        digits = std::string(text);
    }

    mpz_class num(digits, 10);
    if (negative) {
        num = -num;
    }
    const long shift = exponent - frac_len;
    if (shift >= 0) {
        return Rational(mpz_class(num * pow10(static_cast<unsigned long>(shift))));
    }
    return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

std::string Rational::to_string() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

double log2_of(const mpz_class& v)
{
    if (v <= 0) {
        throw InvalidInput("log2 of a non-positive integer");
    }
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp2);
}

double log2_of(const Rational& v)
{
    if (v.sign() <= 0) {
        throw InvalidInput("log2 of a non-positive rational");
    }
    return log2_of(v.numerator()) - log2_of(v.denominator());
}

} // namespace subseq
