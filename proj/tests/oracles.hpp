#pragma once

// Test-only oracles, kept independent of the library's evaluation paths.

#include "eulersum/rational.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

// Euler numbers by the integer recurrence
//   sum_{i=0}^{m} C(2m, 2i) E_{2i} = 0,  E_0 = 1,
// with odd entries zero. Pure mpz arithmetic, no polynomials involved.
inline std::vector<mpz_class> euler_numbers_by_recurrence(std::size_t n_max) {
    std::vector<mpz_class> e(n_max + 1, 0);
    e[0] = 1;
    for (std::size_t n = 2; n <= n_max; n += 2) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < n; i += 2) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), n, i);
            acc += c * e[i];
        }
        e[n] = -acc;
    }
    return e;
}

// Double-precision quasi-periodic Euler evaluation from raw coefficients;
// used by the floating-point midpoint-rule cross-check.
inline double quasi_euler_double(const std::vector<double>& coeffs, double x) {
    const double whole = std::floor(x);
    const double frac = x - whole;
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * frac + coeffs[i];
    }
    return std::fmod(whole, 2.0) != 0.0 ? -acc : acc;
}

inline std::vector<double> to_double_coeffs(const std::vector<eulersum::Rational>& coeffs) {
    std::vector<double> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        out.push_back(c.to_double());
    }
    return out;
}

inline eulersum::Rational random_rational(std::mt19937_64& rng, long num_span, long den_max) {
    std::uniform_int_distribution<long> num(-num_span, num_span);
    std::uniform_int_distribution<long> den(1, den_max);
    return eulersum::Rational(num(rng), den(rng));
}

}  // namespace testutil
