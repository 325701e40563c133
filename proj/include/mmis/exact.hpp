#pragma once

#include <gmpxx.h>

#include <string>

namespace mmis {

using BigInt = mpz_class;
using Rational = mpq_class;

double to_double(const Rational& q);

// log that stays accurate for integers/rationals far beyond double range
double log_big(const BigInt& z);
double log_rational(const Rational& q);

BigInt factorial(long n);
BigInt binomial(long n, long k);

Rational parse_rational(const std::string& s);

// Element of the field Q(i, sqrt(3)), stored as
//   re + im*i + re_s3*sqrt(3) + im_s3*i*sqrt(3)
// with exact rational components. This is closed under products and
// conjugation and covers the characters of every shipped table (rational,
// Gaussian, and order-3/4/6 cyclotomic values).
class CharValue {
   public:
    CharValue() = default;
    CharValue(long v) : re_(v) {}
    CharValue(Rational re, Rational im, Rational re_s3, Rational im_s3)
        : re_(std::move(re)), im_(std::move(im)), re_s3_(std::move(re_s3)), im_s3_(std::move(im_s3)) {}

    // Parses a pair of component strings (real part, coefficient of i).
    // Each component is a sum of terms "p/q" and "p/q*sqrt3",
    // e.g. "-1/2", "0", "1/2*sqrt3", "-1/2+3/2*sqrt3".
    static CharValue parse(const std::string& re, const std::string& im);

    CharValue operator+(const CharValue& o) const;
    CharValue operator-(const CharValue& o) const;
    CharValue operator*(const CharValue& o) const;
    CharValue& operator+=(const CharValue& o);
    bool operator==(const CharValue& o) const;

    CharValue conj() const;
    CharValue pow(unsigned long n) const;

    // |x|^2 = x * conj(x); real for every field element, returned exactly.
    // Throws if the product is not rational (cannot happen for x*conj(x)
    // of the shipped tables, asserted anyway).
    Rational abs2() const;

    bool is_rational() const;
    bool is_zero() const;
    const Rational& rational() const;  // throws unless is_rational()

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& re_s3() const { return re_s3_; }
    const Rational& im_s3() const { return im_s3_; }

    double real_approx() const;
    double imag_approx() const;

    std::string str_re() const;  // component strings, inverse of parse()
    std::string str_im() const;

   private:
    Rational re_, im_, re_s3_, im_s3_;
};

}  // namespace mmis
