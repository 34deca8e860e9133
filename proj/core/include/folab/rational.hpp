#pragma once

#include <folab/errors.hpp>

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folab {

// Exact arbitrary-precision rational. Always canonical: denominator > 0 and
// gcd(|num|, den) = 1 after every operation (GMP canonicalization).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}        // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(const mpz_class& z) : v_(z) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "123", "-4/5"; rejects zero denominators and junk.
    static Rational from_string(std::string_view s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(long e) const;

    std::string to_string() const;  // "n" or "n/d"

private:
    mpq_class v_;
};

// Exact binomial coefficient and falling factorial n(n-1)...(n-k+1), as rationals.
Rational binomial(long n, long k);
Rational falling_factorial(long n, long k);

}  // namespace folab
