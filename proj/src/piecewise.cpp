#include "eulersum/piecewise.hpp"

#include "eulersum/euler.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eulersum {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() != breakpoints_.size() - 1) {
        throw std::invalid_argument("PiecewisePolynomial: need m+1 breakpoints for m pieces");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1])) {
            throw std::invalid_argument("PiecewisePolynomial: breakpoints must strictly increase");
        }
    }
}

Rational PiecewisePolynomial::value_at(const Rational& x) const {
    if (x < domain_lo() || x > domain_hi()) {
        throw std::out_of_range("PiecewisePolynomial: point outside domain");
    }
    // Rightmost interval whose left endpoint is <= x; the final breakpoint
    // falls back to the last piece.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    idx = idx == 0 ? 0 : idx - 1;
    if (idx >= pieces_.size()) {
        idx = pieces_.size() - 1;
    }
    return pieces_[idx](x);
}

Rational PiecewisePolynomial::integrate() const {
    Rational acc;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        acc += pieces_[i].integral(breakpoints_[i], breakpoints_[i + 1]);
    }
    return acc;
}

PiecewisePolynomial PiecewisePolynomial::multiplied_by(const Polynomial& f) const {
    std::vector<Polynomial> pieces;
    pieces.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        pieces.push_back(p * f);
    }
    return PiecewisePolynomial(breakpoints_, std::move(pieces));
}

PiecewisePolynomial PiecewisePolynomial::multiplied_by(const PiecewisePolynomial& other) const {
    if (domain_lo() != other.domain_lo() || domain_hi() != other.domain_hi()) {
        throw std::invalid_argument("PiecewisePolynomial: domains differ");
    }
    std::vector<Rational> merged;
    merged.reserve(breakpoints_.size() + other.breakpoints_.size());
    std::set_union(breakpoints_.begin(), breakpoints_.end(), other.breakpoints_.begin(),
                   other.breakpoints_.end(), std::back_inserter(merged));

    std::vector<Polynomial> pieces;
    pieces.reserve(merged.size() - 1);
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        while (ia + 1 < pieces_.size() && breakpoints_[ia + 1] <= merged[i]) {
            ++ia;
        }
        while (ib + 1 < other.pieces_.size() && other.breakpoints_[ib + 1] <= merged[i]) {
            ++ib;
        }
        pieces.push_back(pieces_[ia] * other.pieces_[ib]);
    }
    return PiecewisePolynomial(std::move(merged), std::move(pieces));
}

PiecewisePolynomial quasi_euler_piecewise(std::size_t k, std::int64_t c, std::int64_t hi) {
    if (c < 1 || hi < 1) {
        throw std::invalid_argument("quasi_euler_piecewise: c and hi must be positive");
    }
    return quasi_euler_affine_piecewise(k, Rational(c), Rational(0), Rational(0), Rational(hi));
}

PiecewisePolynomial quasi_euler_affine_piecewise(std::size_t k, const Rational& scale,
                                                 const Rational& shift, const Rational& lo,
                                                 const Rational& hi) {
    if (scale.is_zero()) {
        throw std::invalid_argument("quasi_euler_affine_piecewise: scale must be nonzero");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("quasi_euler_affine_piecewise: empty domain");
    }

    // Breakpoints wherever scale*x + shift crosses an integer.
    std::vector<Rational> bps;
    bps.push_back(lo);
    const Rational u_at_lo = scale * lo + shift;
    const Rational u_at_hi = scale * hi + shift;
    const Rational& u_min = scale.sign() > 0 ? u_at_lo : u_at_hi;
    const Rational& u_max = scale.sign() > 0 ? u_at_hi : u_at_lo;
    mpz_class t = u_min.floor() + 1;
    std::vector<Rational> crossings;
    for (; Rational(t) < u_max; ++t) {
        crossings.push_back((Rational(t) - shift) / scale);
    }
    if (scale.sign() < 0) {
        std::reverse(crossings.begin(), crossings.end());
    }
    for (auto& x : crossings) {
        if (x > bps.back()) {
            bps.push_back(std::move(x));
        }
    }
    bps.push_back(hi);

    const Polynomial ek = euler_polynomial(k);
    std::vector<Polynomial> pieces;
    pieces.reserve(bps.size() - 1);
    const Rational half(1, 2);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rational mid = (bps[i] + bps[i + 1]) * half;
        const mpz_class level = (scale * mid + shift).floor();
        Polynomial piece = ek.compose_affine(scale, shift - Rational(level));
        if (mpz_odd_p(level.get_mpz_t())) {
            piece = -piece;
        }
        pieces.push_back(std::move(piece));
    }
    return PiecewisePolynomial(std::move(bps), std::move(pieces));
}

}  // namespace eulersum
