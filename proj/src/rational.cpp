#include "color4/rational.hpp"

#include <cmath>
#include <limits>

#include "color4/errors.hpp"

namespace color4 {

void BigInt::set_ll(long long x) {
    // mpz_class has no long long constructor on LP64-unfriendly setups; go via string
    // only when the value does not fit a signed long.
    if (x >= std::numeric_limits<long>::min() && x <= std::numeric_limits<long>::max()) {
        v_ = static_cast<long>(x);
    } else {
        v_ = mpz_class(std::to_string(x));
    }
}

BigInt BigInt::from_string(const std::string& s) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw parse_error("not an integer: '" + s + "'");
    return BigInt(z);
}

bool BigInt::fits_ulonglong() const {
    if (sgn(v_) < 0) return false;
    return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64;
}

unsigned long long BigInt::to_ulonglong() const {
    if (!fits_ulonglong()) throw domain_error("BigInt does not fit unsigned long long");
    unsigned long long r = 0;
    mpz_class t = v_;
    for (int shift = 0; shift < 64 && t != 0; shift += 32) {
        r |= static_cast<unsigned long long>(mpz_class(t % (1_mpz << 32)).get_ui()) << shift;
        t >>= 32;
    }
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(g);
}

BigInt BigInt::pow(const BigInt& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), e);
    return BigInt(r);
}

mpq_class Rational::make(long long n, long long d) {
    if (d == 0) throw domain_error("rational with zero denominator");
    mpq_class q(BigInt(n).raw(), BigInt(d).raw());
    q.canonicalize();
    return q;
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d.is_zero()) throw domain_error("rational with zero denominator");
    v_ = mpq_class(n.raw(), d.raw());
    v_.canonicalize();
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw domain_error("non-finite double");
    mpq_class q(x);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw domain_error("division by zero rational");
    return Rational(mpq_class(v_ / o.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace color4
