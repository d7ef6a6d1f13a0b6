#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace vsc {

// Exact rational number. Wraps GMP's mpq_class and keeps every value
// canonical: reduced to lowest terms, denominator > 0. No floating point
// enters or leaves.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(long e) const;

    Rational inverse() const { return Rational(1) / *this; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // gcd over rationals: gcd of numerators over lcm of denominators.
    // gcd(0, x) = |x|.
    static Rational gcd(const Rational& a, const Rational& b);

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    // Valid only for values that fit; used by combinatorial helpers.
    long to_long() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    struct Hash {
        size_t operator()(const Rational& r) const;
    };

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

Rational factorial(long n);
Rational binomial(long n, long k);

}  // namespace vsc
