#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace color4 {

// Arbitrary-width signed integer. Thin value wrapper around GMP's mpz_class;
// the project-facing surface is kept small on purpose.
class BigInt {
  public:
    BigInt() : v_(0) {}
    BigInt(long long x) : v_() { set_ll(x); }
    explicit BigInt(const mpz_class& z) : v_(z) {}

    static BigInt from_string(const std::string& s);
    std::string to_string() const { return v_.get_str(); }

    BigInt operator+(const BigInt& o) const { return BigInt(mpz_class(v_ + o.v_)); }
    BigInt operator-(const BigInt& o) const { return BigInt(mpz_class(v_ - o.v_)); }
    BigInt operator*(const BigInt& o) const { return BigInt(mpz_class(v_ * o.v_)); }
    BigInt operator/(const BigInt& o) const { return BigInt(mpz_class(v_ / o.v_)); }
    BigInt operator%(const BigInt& o) const { return BigInt(mpz_class(v_ % o.v_)); }
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }
    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

    bool operator==(const BigInt& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const BigInt& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_zero() const { return v_ == 0; }
    int signum() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    bool fits_ulonglong() const;
    unsigned long long to_ulonglong() const;

    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long e);

    const mpz_class& raw() const { return v_; }

  private:
    void set_ll(long long x);
    mpz_class v_;
};

// Exact rational, always normalized (gcd 1, positive denominator).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_() { v_ = make(n, 1); }
    Rational(long long n, long long d) : v_(make(n, d)) {}
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Exact conversion (every finite double is dyadic rational).
    static Rational from_double(double x);

    BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_zero() const { return v_ == 0; }
    int signum() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string to_string() const;  // "p/q", or "p" when q == 1

    const mpq_class& raw() const { return v_; }

  private:
    static mpq_class make(long long n, long long d);
    mpq_class v_;
};

}  // namespace color4
