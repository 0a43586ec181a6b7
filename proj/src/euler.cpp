#include "eulersum/euler.hpp"

#include <mutex>
#include <stdexcept>

namespace eulersum {

namespace {

Polynomial next_euler(const std::vector<Polynomial>& lower) {
    const std::size_t n = lower.size();
    Polynomial p = Polynomial::monomial(n);
    const Rational half(1, 2);
    for (std::size_t k = 0; k < n; ++k) {
        p -= binomial(n, k) * half * lower[k];
    }
    return p;
}

Polynomial next_bernoulli(const std::vector<Polynomial>& lower) {
    const std::size_t n = lower.size();
    Polynomial p = Polynomial::monomial(n);
    const Rational inv(1, static_cast<long>(n) + 1);
    for (std::size_t k = 0; k < n; ++k) {
        p -= binomial(n + 1, k) * inv * lower[k];
    }
    return p;
}

template <Polynomial (*Next)(const std::vector<Polynomial>&)>
Polynomial cached_poly(std::size_t n) {
    static std::mutex mutex;
    static std::vector<Polynomial> table;
    std::lock_guard<std::mutex> lock(mutex);
    while (table.size() <= n) {
        table.push_back(Next(table));
    }
    return table[n];
}

}  // namespace

EulerTable::EulerTable(std::size_t max_degree) {
    polys_.reserve(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        polys_.push_back(next_euler(polys_));
    }
}

const Polynomial& EulerTable::poly(std::size_t k) const {
    if (k >= polys_.size()) {
        throw std::out_of_range("EulerTable: degree beyond table size");
    }
    return polys_[k];
}

BernoulliTable::BernoulliTable(std::size_t max_degree) {
    polys_.reserve(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        polys_.push_back(next_bernoulli(polys_));
    }
}

const Polynomial& BernoulliTable::poly(std::size_t k) const {
    if (k >= polys_.size()) {
        throw std::out_of_range("BernoulliTable: degree beyond table size");
    }
    return polys_[k];
}

Polynomial euler_polynomial(std::size_t n) {
    return cached_poly<next_euler>(n);
}

Polynomial bernoulli_polynomial(std::size_t n) {
    return cached_poly<next_bernoulli>(n);
}

Rational euler_number(std::size_t n) {
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return Rational(two_n) * euler_polynomial(n)(Rational(1, 2));
}

Rational euler_at_zero(std::size_t n) {
    return euler_polynomial(n).coefficient(0);
}

Rational quasi_euler_eval(std::size_t k, const Rational& x) {
    return quasi_euler_eval(euler_polynomial(k), x);
}

Rational quasi_euler_eval(const Polynomial& euler_poly, const Rational& x) {
    const FloorFrac ff = floor_frac(x);
    const Rational value = euler_poly(ff.frac);
    return mpz_odd_p(ff.whole.get_mpz_t()) ? -value : value;
}

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) {
        return Rational(0);
    }
    return x - Rational(x.floor()) - Rational(1, 2);
}

Rational periodic_bernoulli_eval(std::size_t k, const Rational& x) {
    if (k == 0) {
        throw std::invalid_argument("periodic_bernoulli_eval: k must be >= 1");
    }
    if (k == 1) {
        return sawtooth(x);
    }
    return bernoulli_polynomial(k)(floor_frac(x).frac);
}

}  // namespace eulersum
