#include "eulersum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace eulersum {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    mpq_set_num(q_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q_.get_mpq_t(), den.get_mpz_t());
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(mpz_class(std::string(text)));
        }
        mpz_class num(std::string(text.substr(0, slash)));
        mpz_class den(std::string(text.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
    }
}

mpz_class Rational::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return f;
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) {
        return Rational(1);
    }
    if (is_zero() && exponent < 0) {
        throw std::domain_error("Rational::pow: zero base with negative exponent");
    }
    const unsigned long mag =
        exponent < 0 ? -static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), mag);
    return exponent > 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out.q_ = -q_;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

FloorFrac floor_frac(const Rational& x) {
    FloorFrac out;
    out.whole = x.floor();
    out.frac = x - Rational(out.whole);
    return out;
}

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

}  // namespace eulersum
