#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eulersum {

// Arbitrary-precision rational scalar. Values are always stored canonical:
// positive denominator, gcd(|numerator|, denominator) == 1, zero as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Parses "num" or "num/den" with an optional leading sign.
    static Rational from_string(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Greatest integer not exceeding the value (floor toward -infinity).
    mpz_class floor() const;

    // Exact integer power; negative exponents invert, 0^negative throws.
    Rational pow(long exponent) const;

    double to_double() const { return q_.get_d(); }

    // "num" when the value is an integer, else "num/den".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

    friend bool operator==(const Rational& l, const Rational& r) { return l.q_ == r.q_; }
    friend bool operator!=(const Rational& l, const Rational& r) { return l.q_ != r.q_; }
    friend bool operator<(const Rational& l, const Rational& r) { return l.q_ < r.q_; }
    friend bool operator<=(const Rational& l, const Rational& r) { return l.q_ <= r.q_; }
    friend bool operator>(const Rational& l, const Rational& r) { return l.q_ > r.q_; }
    friend bool operator>=(const Rational& l, const Rational& r) { return l.q_ >= r.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Floor/fraction split: value == whole + frac with 0 <= frac < 1.
struct FloorFrac {
    mpz_class whole;
    Rational frac;
};

FloorFrac floor_frac(const Rational& x);

// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned long n, unsigned long k);

}  // namespace eulersum
