#include "mmis/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "mmis/errors.hpp"

namespace mmis {

double to_double(const Rational& q) { return q.get_d(); }

double log_big(const BigInt& z) {
    if (z <= 0) throw Error("log_big: non-positive argument");
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(m) + static_cast<double>(exp) * M_LN2;
}

double log_rational(const Rational& q) {
    return log_big(q.get_num()) - log_big(q.get_den());
}

BigInt factorial(long n) {
    if (n < 0) throw Error("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ConfigError("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

namespace {

// Splits "a+b*sqrt3" style component strings into (rational, sqrt3-coeff).
void parse_component(const std::string& s, Rational& plain, Rational& root3) {
    plain = 0;
    root3 = 0;
    std::string str = s;
    str.erase(std::remove(str.begin(), str.end(), ' '), str.end());
    if (str.empty()) throw ConfigError("empty character component");
    size_t pos = 0;
    while (pos < str.size()) {
        size_t next = pos + 1;  // skip a leading sign
        while (next < str.size() && str[next] != '+' && str[next] != '-') ++next;
        std::string term = str.substr(pos, next - pos);
        bool has_root = false;
        if (auto star = term.find("*sqrt3"); star != std::string::npos) {
            has_root = true;
            term = term.substr(0, star);
        } else if (term == "sqrt3" || term == "+sqrt3" || term == "-sqrt3") {
            has_root = true;
            term = (term[0] == '-') ? "-1" : "1";
        }
        Rational q = parse_rational(term);
        (has_root ? root3 : plain) += q;
        pos = next;
    }
}

std::string component_str(const Rational& plain, const Rational& root3) {
    if (root3 == 0) return plain.get_str();
    std::ostringstream os;
    if (plain != 0) {
        os << plain.get_str();
        if (root3 > 0) os << "+";
    }
    os << root3.get_str() << "*sqrt3";
    return os.str();
}

}  // namespace

CharValue CharValue::parse(const std::string& re, const std::string& im) {
    CharValue v;
    parse_component(re, v.re_, v.re_s3_);
    parse_component(im, v.im_, v.im_s3_);
    return v;
}

CharValue CharValue::operator+(const CharValue& o) const {
    return {re_ + o.re_, im_ + o.im_, re_s3_ + o.re_s3_, im_s3_ + o.im_s3_};
}

CharValue CharValue::operator-(const CharValue& o) const {
    return {re_ - o.re_, im_ - o.im_, re_s3_ - o.re_s3_, im_s3_ - o.im_s3_};
}

CharValue& CharValue::operator+=(const CharValue& o) {
    re_ += o.re_;
    im_ += o.im_;
    re_s3_ += o.re_s3_;
    im_s3_ += o.im_s3_;
    return *this;
}

CharValue CharValue::operator*(const CharValue& o) const {
    // (a + bi + c r + d i r)(a' + b'i + c'r + d'i r), with r^2 = 3, i^2 = -1.
    const Rational &a = re_, &b = im_, &c = re_s3_, &d = im_s3_;
    const Rational &e = o.re_, &f = o.im_, &g = o.re_s3_, &h = o.im_s3_;
    Rational re = a * e - b * f + 3 * (c * g - d * h);
    Rational im = a * f + b * e + 3 * (c * h + d * g);
    Rational re3 = a * g + c * e - (b * h + d * f);
    Rational im3 = a * h + d * e + b * g + c * f;
    return {re, im, re3, im3};
}

bool CharValue::operator==(const CharValue& o) const {
    return re_ == o.re_ && im_ == o.im_ && re_s3_ == o.re_s3_ && im_s3_ == o.im_s3_;
}

CharValue CharValue::conj() const { return {re_, -im_, re_s3_, -im_s3_}; }

CharValue CharValue::pow(unsigned long n) const {
    CharValue result(1);
    CharValue base = *this;
    while (n > 0) {
        if (n & 1UL) result = result * base;
        base = base * base;
        n >>= 1UL;
    }
    return result;
}

Rational CharValue::abs2() const {
    CharValue p = (*this) * conj();
    if (!p.is_rational()) throw Error("abs2: irrational norm");
    return p.rational();
}

bool CharValue::is_rational() const { return im_ == 0 && re_s3_ == 0 && im_s3_ == 0; }

bool CharValue::is_zero() const { return re_ == 0 && im_ == 0 && re_s3_ == 0 && im_s3_ == 0; }

const Rational& CharValue::rational() const {
    if (!is_rational()) throw Error("character value is not rational");
    return re_;
}

double CharValue::real_approx() const { return to_double(re_) + to_double(re_s3_) * std::sqrt(3.0); }
double CharValue::imag_approx() const { return to_double(im_) + to_double(im_s3_) * std::sqrt(3.0); }

std::string CharValue::str_re() const { return component_str(re_, re_s3_); }
std::string CharValue::str_im() const { return component_str(im_, im_s3_); }

}  // namespace mmis
