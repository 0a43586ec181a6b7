#pragma once

#include "eulersum/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace eulersum {

// Exact piecewise polynomial over [breakpoints.front(), breakpoints.back()].
// pieces[i] is the restriction to the open interval
// (breakpoints[i], breakpoints[i+1]); values at breakpoints follow the piece
// to the right, which leaves integration unaffected.
class PiecewisePolynomial {
public:
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    std::size_t piece_count() const { return pieces_.size(); }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const Polynomial& piece(std::size_t i) const { return pieces_.at(i); }
    const Rational& domain_lo() const { return breakpoints_.front(); }
    const Rational& domain_hi() const { return breakpoints_.back(); }

    Rational value_at(const Rational& x) const;

    // Exact integral over the whole domain (sum of per-piece antiderivative
    // differences).
    Rational integrate() const;

    PiecewisePolynomial multiplied_by(const Polynomial& f) const;

    // Pointwise product on the merged breakpoint set; domains must coincide.
    PiecewisePolynomial multiplied_by(const PiecewisePolynomial& other) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> pieces_;
};

// x |-> quasiE_k(c x) on [0, hi] with breakpoints at j/c; the piece on
// (j/c, (j+1)/c) is (-1)^j E_k(c x - j).
PiecewisePolynomial quasi_euler_piecewise(std::size_t k, std::int64_t c, std::int64_t hi);

// General form: x |-> quasiE_k(scale x + shift) on [lo, hi], scale != 0.
PiecewisePolynomial quasi_euler_affine_piecewise(std::size_t k, const Rational& scale,
                                                 const Rational& shift, const Rational& lo,
                                                 const Rational& hi);

}  // namespace eulersum
