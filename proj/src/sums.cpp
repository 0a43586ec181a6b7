#include "eulersum/sums.hpp"

#include "eulersum/euler.hpp"

#include <limits>
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

void require_odd(const char* op, const char* name, std::int64_t v) {
    require_positive(op, name, v);
    if (v % 2 == 0) {
        throw std::invalid_argument(std::string(op) + ": " + name + " must be odd");
    }
}

void require_even(const char* op, const char* name, std::int64_t v) {
    require_positive(op, name, v);
    if (v % 2 != 0) {
        throw std::invalid_argument(std::string(op) + ": " + name + " must be even");
    }
}

void require_coprime(const char* op, std::int64_t a, std::int64_t b) {
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument(std::string(op) + ": a and b must be coprime");
    }
}

mpz_class int_pow(std::int64_t base, unsigned long exp) {
    mpz_class out;
    mpz_class b(static_cast<long>(base));
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

}  // namespace

std::string to_string(EvalPath path) {
    return path == EvalPath::direct ? "direct" : "weighted-identity";
}

Rational apostol_dedekind_sum(unsigned p, std::int64_t a, std::int64_t b) {
    require_positive("apostol_dedekind_sum", "a", a);
    require_positive("apostol_dedekind_sum", "b", b);
    const Polynomial ep = euler_polynomial(p);
    const Polynomial e1 = euler_polynomial(1);
    const mpz_class za(static_cast<long>(a));
    Rational acc;
    for (std::int64_t j = 0; j < b; ++j) {
        const Rational term = quasi_euler_eval(ep, Rational(za * j, mpz_class(static_cast<long>(b)))) *
                              quasi_euler_eval(e1, Rational(j, b));
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return Rational(2) * acc;
}

Rational apostol_dedekind_sum_weighted(unsigned p, std::int64_t a, std::int64_t b) {
    require_odd("apostol_dedekind_sum_weighted", "a", a);
    require_odd("apostol_dedekind_sum_weighted", "b", b);
    require_coprime("apostol_dedekind_sum_weighted", a, b);
    const Polynomial ep = euler_polynomial(p);
    const mpz_class za(static_cast<long>(a));
    Rational acc;
    for (std::int64_t j = 1; j < b; ++j) {
        const Rational term =
            Rational(j) * quasi_euler_eval(ep, Rational(za * j, mpz_class(static_cast<long>(b))));
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return Rational(2, b) * acc - Rational(1, b).pow(static_cast<long>(p)) * euler_at_zero(p);
}

SumResult evaluate_apostol_sum(unsigned p, std::int64_t a, std::int64_t b, EvalPath path) {
    SumResult out;
    out.p = p;
    out.a = a;
    out.b = b;
    out.path = path;
    out.value = path == EvalPath::direct ? apostol_dedekind_sum(p, a, b)
                                         : apostol_dedekind_sum_weighted(p, a, b);
    return out;
}

Rational generalized_dedekind_sum(unsigned p, std::int64_t a, std::int64_t b) {
    if (p == 0) {
        throw std::invalid_argument("generalized_dedekind_sum: p must be >= 1");
    }
    require_positive("generalized_dedekind_sum", "a", a);
    require_positive("generalized_dedekind_sum", "b", b);
    const mpz_class za(static_cast<long>(a));
    Rational acc;
    for (std::int64_t j = 0; j < b; ++j) {
        acc += periodic_bernoulli_eval(p, Rational(za * j, mpz_class(static_cast<long>(b)))) *
               sawtooth(Rational(j, b));
    }
    return acc;
}

std::int64_t alternating_sign_sum(std::int64_t a, std::int64_t b) {
    require_odd("alternating_sign_sum", "a", a);
    require_odd("alternating_sign_sum", "b", b);
    require_coprime("alternating_sign_sum", a, b);
    const mpz_class za(static_cast<long>(a));
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j < b; ++j) {
        mpz_class q;
        mpz_class num = za * j;
        mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(b));
        const bool odd = (j % 2 != 0) != (mpz_odd_p(q.get_mpz_t()) != 0);
        acc += odd ? -1 : 1;
    }
    return acc;
}

ReciprocityReport reciprocity_sides(unsigned p, std::int64_t a, std::int64_t b) {
    if (p == 0) {
        throw std::invalid_argument("reciprocity_sides: p must be >= 1");
    }
    require_odd("reciprocity_sides", "a", a);
    require_odd("reciprocity_sides", "b", b);
    require_coprime("reciprocity_sides", a, b);

    ReciprocityReport rep;
    rep.p = p;
    rep.a = a;
    rep.b = b;

    const Rational t_ab = apostol_dedekind_sum(p, a, b);
    const Rational t_ba = apostol_dedekind_sum(p, b, a);

    if (p % 2 == 0) {
        rep.parity_case = 1;
        rep.lhs = Rational(mpz_class(static_cast<long>(a)) * int_pow(b, p + 1)) * t_ab +
                  Rational(int_pow(a, p + 1) * mpz_class(static_cast<long>(b))) * t_ba;
        Rational sum;
        for (unsigned k = 0; k < p; ++k) {
            sum += binomial(p, k) * Rational(int_pow(b, k)) * euler_at_zero(k) *
                   Rational(int_pow(a, p - k)) * euler_at_zero(p - k);
        }
        rep.rhs = Rational(2) * euler_at_zero(p + 1) - Rational(a) * Rational(b) * sum;
    } else {
        rep.parity_case = 2;
        rep.lhs = Rational(int_pow(b, p)) * t_ab - Rational(int_pow(a, p)) * t_ba;
        rep.rhs = Rational(int_pow(a, p) - int_pow(b, p)) * euler_at_zero(p);
    }
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

std::pair<Rational, Rational> distribution_sides(unsigned p, std::int64_t a, std::int64_t b,
                                                 std::int64_t q) {
    require_even("distribution_sides", "a", a);
    require_odd("distribution_sides", "b", b);
    require_odd("distribution_sides", "q", q);
    if (a > (std::numeric_limits<std::int64_t>::max)() / q ||
        b > (std::numeric_limits<std::int64_t>::max)() / q) {
        throw std::invalid_argument("distribution_sides: q*a or q*b overflows");
    }
    return {apostol_dedekind_sum(p, q * a, q * b), apostol_dedekind_sum(p, a, b) / Rational(q)};
}

}  // namespace eulersum
