#pragma once

#include "eulersum/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace eulersum {

// Euler polynomials E_0..E_N, generated by the recurrence
//   E_n(x) = x^n - (1/2) * sum_{k<n} C(n,k) E_k(x),
// the coefficient-level form of E_n(x+1) + E_n(x) = 2 x^n.
class EulerTable {
public:
    static constexpr std::size_t kDefaultMaxDegree = 16;

    explicit EulerTable(std::size_t max_degree = kDefaultMaxDegree);

    std::size_t max_degree() const { return polys_.size() - 1; }
    const Polynomial& poly(std::size_t k) const;

private:
    std::vector<Polynomial> polys_;
};

// Bernoulli polynomials B_0..B_N under the standard normalization:
// monic, B_n(x+1) - B_n(x) = n x^{n-1}, zero mean on [0,1] for n >= 1.
class BernoulliTable {
public:
    static constexpr std::size_t kDefaultMaxDegree = 16;

    explicit BernoulliTable(std::size_t max_degree = kDefaultMaxDegree);

    std::size_t max_degree() const { return polys_.size() - 1; }
    const Polynomial& poly(std::size_t k) const;

private:
    std::vector<Polynomial> polys_;
};

// Cached accessors; the cache extends on demand and is internally
// synchronized, same results as building a fresh table.
Polynomial euler_polynomial(std::size_t n);
Polynomial bernoulli_polynomial(std::size_t n);

// Euler number 2^n E_n(1/2); integer-valued, zero for odd n.
Rational euler_number(std::size_t n);

// E_n(0); zero for even n >= 2.
Rational euler_at_zero(std::size_t n);

// Quasi-periodic Euler function (-1)^[x] E_k({x}).
Rational quasi_euler_eval(std::size_t k, const Rational& x);

// Same, with the caller-supplied degree-k Euler polynomial (hot loops).
Rational quasi_euler_eval(const Polynomial& euler_poly, const Rational& x);

// Sawtooth ((x)): x - [x] - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

// Periodic Bernoulli function: B_k({x}) for k > 1, ((x)) for k == 1.
// Rejects k == 0.
Rational periodic_bernoulli_eval(std::size_t k, const Rational& x);

}  // namespace eulersum
