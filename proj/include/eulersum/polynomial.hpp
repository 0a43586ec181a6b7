#pragma once

#include "eulersum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace eulersum {

// Dense univariate polynomial over Rational, coefficients stored in
// ascending degree order. The highest-index coefficient is nonzero; the
// zero polynomial is the empty sequence (degree() == -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& value);
    static Polynomial monomial(std::size_t degree, const Rational& coefficient = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Coefficient of x^i, zero beyond the stored degree.
    Rational coefficient(std::size_t i) const;

    // Exact Horner evaluation.
    Rational operator()(const Rational& x) const;

    // order-th derivative; orders past the degree give the zero polynomial.
    Polynomial derivative(unsigned order = 1) const;

    // Antiderivative with zero constant term.
    Polynomial antiderivative() const;

    // x |-> P(scale * x + shift), expanded exactly.
    Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

    // Exact definite integral over [lo, hi].
    Rational integral(const Rational& lo, const Rational& hi) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& l, const Polynomial& r);

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.coeffs_ == r.coeffs_; }
    friend bool operator!=(const Polynomial& l, const Polynomial& r) { return !(l == r); }

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace eulersum
