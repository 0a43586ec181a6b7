#include "eulersum/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace eulersum {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    normalize();
}

Polynomial Polynomial::constant(const Rational& value) {
    return Polynomial({value});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coefficient) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
    std::vector<Rational> c = coeffs_;
    for (unsigned pass = 0; pass < order && !c.empty(); ++pass) {
        for (std::size_t i = 1; i < c.size(); ++i) {
            c[i - 1] = c[i] * Rational(static_cast<long>(i));
        }
        c.pop_back();
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::antiderivative() const {
    if (is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> c(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        c[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
    // Horner in the polynomial ring: acc = acc*(scale x + shift) + c_i.
    const Polynomial inner({shift, scale});
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * inner + Polynomial::constant(coeffs_[i]);
    }
    return acc;
}

Rational Polynomial::integral(const Rational& lo, const Rational& hi) const {
    const Polynomial anti = antiderivative();
    return anti(hi) - anti(lo);
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    if (l.is_zero() || r.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> c(l.coeffs_.size() + r.coeffs_.size() - 1);
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
            c[i + j] += l.coeffs_[i] * r.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const Rational& c = p.coefficients()[i];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (i == 0 || mag != Rational(1)) {
            os << mag.str();
        }
        if (i >= 1) {
            if (mag != Rational(1)) {
                os << "*";
            }
            os << "x";
            if (i > 1) {
                os << "^" << i;
            }
        }
        first = false;
    }
    return os;
}

}  // namespace eulersum
