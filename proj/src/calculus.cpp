#include "eulersum/calculus.hpp"

#include "eulersum/euler.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eulersum {

namespace {

void require_positive(const char* op, const char* name, std::int64_t v) {
    if (v < 1) {
        throw std::invalid_argument(std::string(op) + ": " + name + " must be a positive integer");
    }
}

void require_odd_coprime(const char* op, std::int64_t a, std::int64_t b) {
    require_positive(op, "a", a);
    require_positive(op, "b", b);
    if (a % 2 == 0 || b % 2 == 0) {
        throw std::invalid_argument(std::string(op) + ": a and b must be odd");
    }
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument(std::string(op) + ": a and b must be coprime");
    }
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Phase of sin((2k+1) pi x - pi p / 2) as a rational multiple of pi,
// reduced into [0, 2); lattice points then give exact zeros and units.
double sin_pi_reduced(const Rational& r) {
    if (r.is_zero() || r == Rational(1)) {
        return 0.0;
    }
    if (r == Rational(1, 2)) {
        return 1.0;
    }
    if (r == Rational(3, 2)) {
        return -1.0;
    }
    return std::sin(std::numbers::pi * r.to_double());
}

Rational mod_two(const Rational& r) {
    const Rational half = r * Rational(1, 2);
    return (half - Rational(half.floor())) * Rational(2);
}

}  // namespace

Rational integrate_quasi_product(unsigned p, unsigned n, std::int64_t a, std::int64_t b) {
    require_positive("integrate_quasi_product", "a", a);
    require_positive("integrate_quasi_product", "b", b);
    const PiecewisePolynomial left =
        quasi_euler_affine_piecewise(p, Rational(a), Rational(0), Rational(0), Rational(1));
    const PiecewisePolynomial right =
        quasi_euler_affine_piecewise(n, Rational(b), Rational(0), Rational(0), Rational(1));
    return left.multiplied_by(right).integrate();
}

Rational quasi_product_integral_closed_form(unsigned p, unsigned n, std::int64_t a,
                                            std::int64_t b) {
    require_odd_coprime("quasi_product_integral_closed_form", a, b);
    const Rational sign = n % 2 == 0 ? Rational(-2) : Rational(2);
    mpz_class a_pow, b_pow;
    mpz_class za(static_cast<long>(a)), zb(static_cast<long>(b));
    mpz_pow_ui(a_pow.get_mpz_t(), za.get_mpz_t(), n + 1);
    mpz_pow_ui(b_pow.get_mpz_t(), zb.get_mpz_t(), p + 1);
    return sign / (Rational(static_cast<long>(n) + 1) * binomial(p + n + 1, n + 1)) /
           Rational(a_pow * b_pow) * euler_at_zero(p + n + 1);
}

Rational sign_integral(std::int64_t a, std::int64_t b) {
    require_odd_coprime("sign_integral", a, b);
    return integrate_quasi_product(0, 0, a, b);
}

Rational x_weighted_integral(std::int64_t a) {
    require_positive("x_weighted_integral", "a", a);
    const PiecewisePolynomial sign_fn =
        quasi_euler_affine_piecewise(0, Rational(a), Rational(0), Rational(0), Rational(1));
    return sign_fn.multiplied_by(Polynomial::monomial(1)).integrate();
}

std::pair<Rational, Rational> boole_summation_sides(const Polynomial& f, std::int64_t alpha,
                                                    std::int64_t beta, unsigned m) {
    if (m < 1) {
        throw std::invalid_argument("boole_summation_sides: m must be >= 1");
    }
    if (alpha >= beta) {
        throw std::invalid_argument("boole_summation_sides: alpha must be < beta");
    }

    Rational lhs;
    for (std::int64_t j = alpha; j < beta; ++j) {
        const Rational v = f(Rational(j));
        if (j % 2 == 0) {
            lhs += v;
        } else {
            lhs -= v;
        }
    }
    lhs *= Rational(2);

    Rational rhs;
    Polynomial deriv = f;
    for (unsigned k = 0; k < m; ++k) {
        const Rational at_beta = deriv(Rational(beta));
        const Rational at_alpha = deriv(Rational(alpha));
        const Rational beta_part = (beta - 1) % 2 == 0 ? at_beta : -at_beta;
        const Rational alpha_part = alpha % 2 == 0 ? at_alpha : -at_alpha;
        rhs += euler_at_zero(k) / factorial(k) * (beta_part + alpha_part);
        deriv = deriv.derivative();
    }
    // deriv now holds f^(m).
    if (!deriv.is_zero()) {
        const PiecewisePolynomial kernel = quasi_euler_affine_piecewise(
            m - 1, Rational(-1), Rational(0), Rational(alpha), Rational(beta));
        rhs += kernel.multiplied_by(deriv).integrate() / factorial(m - 1);
    }
    return {lhs, rhs};
}

double fourier_partial(unsigned p, const Rational& x, unsigned long terms) {
    if (terms < 1) {
        throw std::invalid_argument("fourier_partial: terms must be >= 1");
    }
    if (x < Rational(0) || x >= Rational(1) || (p == 0 && x.is_zero())) {
        throw std::invalid_argument(p == 0 ? "fourier_partial: need 0 < x < 1 for p = 0"
                                           : "fourier_partial: need 0 <= x < 1");
    }

    // Phase r_k = (2k+1)x - p/2 stepped by 2x and kept reduced mod 2.
    Rational phase = mod_two(x - Rational(p, 2));
    const Rational step = mod_two(Rational(2) * x);

    double sum = 0.0;
    double carry = 0.0;
    for (unsigned long k = 0; k < terms; ++k) {
        const double denom = std::pow(2.0 * static_cast<double>(k) + 1.0, p + 1);
        const double term = sin_pi_reduced(phase) / denom;
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        phase = mod_two(phase + step);
    }

    const double scale =
        4.0 * factorial(p).to_double() / std::pow(std::numbers::pi, p + 1);
    return scale * sum;
}

double FourierApproximation::abs_error() const {
    return std::fabs(value - exact.to_double());
}

FourierApproximation fourier_report(unsigned p, const Rational& x, unsigned long terms) {
    FourierApproximation out;
    out.p = p;
    out.x = x;
    out.terms = terms;
    out.value = fourier_partial(p, x, terms);
    out.exact = quasi_euler_eval(p, x);
    return out;
}

}  // namespace eulersum
