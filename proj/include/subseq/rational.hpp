#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace subseq {

using BigCount = mpz_class;

/**
 * Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
 *
 * A value type over mpq_class. Arithmetic always materialises a Rational, so
 * the type can sit inside Eigen matrices without gmpxx expression templates
 * leaking into Eigen's kernels.
 */
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(mpz_class(std::to_string(v))) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(unsigned long long v) : q_(mpz_class(std::to_string(v))) {}
    Rational(const mpz_class& v) : q_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

    /// Parses "p/q", an integer, or a decimal literal such as "0.3" or "-1.25e-2" exactly.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& gmp() const { return q_; }

    double to_double() const { return q_.get_d(); }
    /// Always "p/q", including integers ("5/1").
    std::string to_string() const;

    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend Rational operator+(const Rational& a) { return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

Rational abs(const Rational& r);

/// Scalar-generic conversion used by code templated on double / Rational.
inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.to_double(); }
inline double to_double(const mpz_class& v) { return v.get_d(); }

/// log2 of a positive big integer, valid far beyond the range of double.
double log2_of(const mpz_class& v);
/// log2 of a positive rational.
double log2_of(const Rational& v);

} // namespace subseq

namespace Eigen {

template <>
struct NumTraits<subseq::Rational> : GenericNumTraits<subseq::Rational> {
    using Real = subseq::Rational;
    using NonInteger = subseq::Rational;
    using Nested = subseq::Rational;
    using Literal = subseq::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 50
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
