#pragma once

#include "eulersum/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace eulersum {

enum class EvalPath { direct, weighted_identity };

std::string to_string(EvalPath path);

// One labeled exact sum value together with the path that produced it.
struct SumResult {
    unsigned p = 0;
    std::int64_t a = 1;
    std::int64_t b = 1;
    Rational value;
    EvalPath path = EvalPath::direct;
};

// Both sides of the reciprocity identity for one (p, a, b).
struct ReciprocityReport {
    unsigned p = 0;
    std::int64_t a = 1;
    std::int64_t b = 1;
    Rational lhs;
    Rational rhs;
    int parity_case = 0;  // 1 for even p, 2 for odd p
    bool holds = false;
};

// Alternating Dedekind-type sum over quasi-periodic Euler functions:
//   2 * sum_{j=0}^{b-1} (-1)^j quasiE_p(a j / b) quasiE_1(j / b).
// Defined for any positive a, b; no parity or coprimality needed.
Rational apostol_dedekind_sum(unsigned p, std::int64_t a, std::int64_t b);

// Same value through the weighted-sum identity
//   (2/b) * sum_{j=0}^{b-1} (-1)^j j quasiE_p(a j / b) - b^{-p} E_p(0),
// valid for odd coprime a, b.
Rational apostol_dedekind_sum_weighted(unsigned p, std::int64_t a, std::int64_t b);

SumResult evaluate_apostol_sum(unsigned p, std::int64_t a, std::int64_t b, EvalPath path);

// Generalized Dedekind sum over periodic Bernoulli functions:
//   sum_{j=0}^{b-1} periodicB_p(a j / b) periodicB_1(j / b), p >= 1.
Rational generalized_dedekind_sum(unsigned p, std::int64_t a, std::int64_t b);

// sum_{j=0}^{b-1} (-1)^{j + [a j / b]} for odd coprime a, b.
std::int64_t alternating_sign_sum(std::int64_t a, std::int64_t b);

// Evaluates both sides of the reciprocity identity for odd coprime a, b
// and p >= 1; the branch taken depends on the parity of p.
ReciprocityReport reciprocity_sides(unsigned p, std::int64_t a, std::int64_t b);

// Returns (T_p(q a, q b), T_p(a, b) / q) for even a and odd b, q; the
// distribution identity says the two components are equal.
std::pair<Rational, Rational> distribution_sides(unsigned p, std::int64_t a, std::int64_t b,
                                                 std::int64_t q);

}  // namespace eulersum
