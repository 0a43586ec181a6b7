#pragma once

#include "eulersum/piecewise.hpp"
#include "eulersum/polynomial.hpp"

#include <cstdint>
#include <utility>

namespace eulersum {

// Exact value of integral_0^1 quasiE_p(a x) quasiE_n(b x) dx, computed by
// merging the breakpoint grids {j/a} and {j/b}, multiplying the piece
// polynomials and integrating piece by piece.
Rational integrate_quasi_product(unsigned p, unsigned n, std::int64_t a, std::int64_t b);

// Closed form of the same integral for odd coprime a, b:
//   2 (-1)^{n+1} / ((n+1) C(p+n+1, n+1)) * E_{p+n+1}(0) / (a^{n+1} b^{p+1}).
Rational quasi_product_integral_closed_form(unsigned p, unsigned n, std::int64_t a,
                                            std::int64_t b);

// integral_0^1 (-1)^{[ax]+[bx]} dx for odd coprime a, b; equals 1/(ab).
Rational sign_integral(std::int64_t a, std::int64_t b);

// integral_0^1 x (-1)^{[ax]} dx; equals 1/(2a) for odd a.
Rational x_weighted_integral(std::int64_t a);

// Exact (LHS, RHS) of the Boole summation formula for a polynomial f on
// integer range [alpha, beta] with m boundary terms:
//   LHS = 2 sum_{j=alpha}^{beta-1} (-1)^j f(j)
//   RHS = sum_{k<m} E_k(0)/k! ((-1)^{beta-1} f^(k)(beta) + (-1)^alpha f^(k)(alpha))
//         + 1/(m-1)! integral_alpha^beta f^(m)(x) quasiE_{m-1}(-x) dx.
std::pair<Rational, Rational> boole_summation_sides(const Polynomial& f, std::int64_t alpha,
                                                    std::int64_t beta, unsigned m);

// Floating-point partial sum of the sine expansion of quasiE_p:
//   (4 p! / pi^{p+1}) sum_{k<terms} sin((2k+1) pi x - pi p / 2) / (2k+1)^{p+1}.
// Domain: 0 <= x < 1 for p >= 1, 0 < x < 1 for p == 0.
double fourier_partial(unsigned p, const Rational& x, unsigned long terms);

struct FourierApproximation {
    unsigned p = 0;
    Rational x;
    unsigned long terms = 0;
    double value = 0.0;
    Rational exact;

    double abs_error() const;
};

FourierApproximation fourier_report(unsigned p, const Rational& x, unsigned long terms);

}  // namespace eulersum
