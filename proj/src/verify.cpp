#include "eulersum/verify.hpp"

#include "eulersum/calculus.hpp"
#include "eulersum/euler.hpp"
#include "eulersum/sums.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eulersum::verify {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

template <typename Param, typename Check>
VerificationReport sweep(std::string label, const std::vector<Param>& params,
                         unsigned parallelism, Check&& check) {
    VerificationReport rep;
    rep.identity = std::move(label);
    rep.instances = params.size();

    std::vector<std::optional<FailureRecord>> slots(params.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(parallelism,
                                                             static_cast<unsigned>(params.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            slots[i] = check(params[i]);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < params.size(); i += workers) {
                    slots[i] = check(params[i]);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& slot : slots) {
        if (slot) {
            rep.failures.push_back(std::move(*slot));
        }
    }
    return rep;
}

std::optional<FailureRecord> mismatch(std::string params, const Rational& lhs,
                                      const Rational& rhs) {
    if (lhs == rhs) {
        return std::nullopt;
    }
    return FailureRecord{std::move(params), lhs.str(), rhs.str()};
}

// Small rationals for the randomized identity instances; reduced form keeps
// them reproducible as strings.
Rational random_rational(std::mt19937_64& rng, long num_span, long den_max) {
    std::uniform_int_distribution<long> num(-num_span, num_span);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

std::vector<std::int64_t> odd_values(std::int64_t max) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 1; v <= max; v += 2) {
        out.push_back(v);
    }
    return out;
}

std::vector<std::int64_t> even_values(std::int64_t max) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 2; v <= max; v += 2) {
        out.push_back(v);
    }
    return out;
}

struct ReciprocityParam {
    unsigned p;
    std::int64_t a;
    std::int64_t b;
};

std::vector<ReciprocityParam> reciprocity_params(const SweepConfig& cfg, bool even_p) {
    std::vector<ReciprocityParam> params;
    for (unsigned p = even_p ? 2 : 1; p <= cfg.p_max; p += 2) {
        for (const std::int64_t a : odd_values(cfg.a_max)) {
            for (const std::int64_t b : odd_values(cfg.effective_b_max())) {
                if (a < b && std::gcd(a, b) == 1) {
                    params.push_back({p, a, b});
                }
            }
        }
    }
    return params;
}

VerificationReport run_theorem(const SweepConfig& cfg, bool even_p) {
    const auto params = reciprocity_params(cfg, even_p);
    return sweep(even_p ? "theorem-1" : "theorem-2", params, cfg.parallelism,
                 [](const ReciprocityParam& prm) -> std::optional<FailureRecord> {
                     const ReciprocityReport rep = reciprocity_sides(prm.p, prm.a, prm.b);
                     std::ostringstream params_str;
                     params_str << "p=" << prm.p << " a=" << prm.a << " b=" << prm.b;
                     return mismatch(params_str.str(), rep.lhs, rep.rhs);
                 });
}

VerificationReport run_pf_def_1(const SweepConfig& cfg) {
    std::vector<ReciprocityParam> params;
    for (unsigned p = 0; p <= cfg.p_max; ++p) {
        for (const std::int64_t a : odd_values(cfg.a_max)) {
            for (const std::int64_t b : odd_values(cfg.effective_b_max())) {
                if (std::gcd(a, b) == 1) {
                    params.push_back({p, a, b});
                }
            }
        }
    }
    return sweep("pf-def-1", params, cfg.parallelism,
                 [](const ReciprocityParam& prm) -> std::optional<FailureRecord> {
                     std::ostringstream params_str;
                     params_str << "p=" << prm.p << " a=" << prm.a << " b=" << prm.b;
                     return mismatch(params_str.str(),
                                     apostol_dedekind_sum_weighted(prm.p, prm.a, prm.b),
                                     apostol_dedekind_sum(prm.p, prm.a, prm.b));
                 });
}

struct ShiftLemmaParam {
    unsigned p;
    std::int64_t a;  // 1 for the plain lemma
    std::int64_t b;
    Rational x;
};

// sum_{j=0}^{b-1} (-1)^j quasiE_p((x + a j)/b) == b^{-p} quasiE_p(x)
std::optional<FailureRecord> check_shift_lemma(const ShiftLemmaParam& prm) {
    const Polynomial ep = euler_polynomial(prm.p);
    Rational acc;
    for (std::int64_t j = 0; j < prm.b; ++j) {
        const Rational arg = (prm.x + Rational(prm.a) * Rational(j)) / Rational(prm.b);
        const Rational term = quasi_euler_eval(ep, arg);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    const Rational expected =
        Rational(1, prm.b).pow(static_cast<long>(prm.p)) * quasi_euler_eval(ep, prm.x);
    std::ostringstream params_str;
    params_str << "p=" << prm.p << " a=" << prm.a << " b=" << prm.b << " x=" << prm.x.str();
    return mismatch(params_str.str(), acc, expected);
}

VerificationReport run_shift_lemma(const SweepConfig& cfg, bool with_multiplier) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<ShiftLemmaParam> params;
    for (unsigned p = 0; p <= cfg.p_max; ++p) {
        for (const std::int64_t b : odd_values(cfg.effective_b_max())) {
            if (with_multiplier) {
                for (const std::int64_t a : odd_values(cfg.a_max)) {
                    if (std::gcd(a, b) == 1) {
                        params.push_back({p, a, b, random_rational(rng, 60, 24)});
                    }
                }
            } else {
                params.push_back({p, 1, b, random_rational(rng, 60, 24)});
            }
        }
    }
    return sweep(with_multiplier ? "lem-s3" : "lem-1", params, cfg.parallelism,
                 check_shift_lemma);
}

struct ProductIntegralParam {
    unsigned p;
    unsigned n;
    std::int64_t a;
    std::int64_t b;
};

VerificationReport run_product_integral(const SweepConfig& cfg) {
    std::vector<ProductIntegralParam> params;
    for (unsigned p = 0; p <= cfg.p_max; ++p) {
        for (unsigned n = 0; p + n <= cfg.p_max; ++n) {
            for (const std::int64_t a : odd_values(cfg.a_max)) {
                for (const std::int64_t b : odd_values(cfg.effective_b_max())) {
                    if (std::gcd(a, b) == 1) {
                        params.push_back({p, n, a, b});
                    }
                }
            }
        }
    }
    return sweep("lem-2", params, cfg.parallelism,
                 [](const ProductIntegralParam& prm) -> std::optional<FailureRecord> {
                     std::ostringstream params_str;
                     params_str << "p=" << prm.p << " n=" << prm.n << " a=" << prm.a
                                << " b=" << prm.b;
                     return mismatch(params_str.str(),
                                     integrate_quasi_product(prm.p, prm.n, prm.a, prm.b),
                                     quasi_product_integral_closed_form(prm.p, prm.n, prm.a,
                                                                        prm.b));
                 });
}

struct DistributionParam {
    unsigned p;
    std::int64_t a;
    std::int64_t b;
    std::int64_t q;
};

VerificationReport run_distribution(const SweepConfig& cfg) {
    std::vector<DistributionParam> params;
    for (unsigned p = 0; p <= cfg.p_max; ++p) {
        for (const std::int64_t a : even_values(cfg.a_max)) {
            for (const std::int64_t b : odd_values(cfg.effective_b_max())) {
                for (const std::int64_t q : odd_values(cfg.q_max)) {
                    params.push_back({p, a, b, q});
                }
            }
        }
    }
    return sweep("proposition", params, cfg.parallelism,
                 [](const DistributionParam& prm) -> std::optional<FailureRecord> {
                     const auto [scaled, reference] =
                         distribution_sides(prm.p, prm.a, prm.b, prm.q);
                     std::ostringstream params_str;
                     params_str << "p=" << prm.p << " a=" << prm.a << " b=" << prm.b
                                << " q=" << prm.q;
                     return mismatch(params_str.str(), scaled, reference);
                 });
}

struct PairParam {
    std::int64_t a;
    std::int64_t b;
};

std::vector<PairParam> odd_coprime_pairs(std::int64_t a_max, std::int64_t b_max) {
    std::vector<PairParam> params;
    for (const std::int64_t a : odd_values(a_max)) {
        for (const std::int64_t b : odd_values(b_max)) {
            if (a <= b && std::gcd(a, b) == 1) {
                params.push_back({a, b});
            }
        }
    }
    return params;
}

VerificationReport run_rho(const SweepConfig& cfg) {
    const auto params = odd_coprime_pairs(cfg.a_max, cfg.effective_b_max());
    return sweep("rho", params, cfg.parallelism,
                 [](const PairParam& prm) -> std::optional<FailureRecord> {
                     const std::int64_t total =
                         alternating_sign_sum(prm.a, prm.b) + alternating_sign_sum(prm.b, prm.a);
                     std::ostringstream params_str;
                     params_str << "a=" << prm.a << " b=" << prm.b;
                     return mismatch(params_str.str(), Rational(total), Rational(2));
                 });
}

VerificationReport run_sign_integral(const SweepConfig& cfg) {
    const auto params = odd_coprime_pairs(cfg.a_max, cfg.effective_b_max());
    return sweep("sign-integral", params, cfg.parallelism,
                 [](const PairParam& prm) -> std::optional<FailureRecord> {
                     std::ostringstream params_str;
                     params_str << "a=" << prm.a << " b=" << prm.b;
                     return mismatch(params_str.str(), sign_integral(prm.a, prm.b),
                                     Rational(1, prm.a * prm.b));
                 });
}

VerificationReport run_x_weighted(const SweepConfig& cfg) {
    const auto params = odd_values(cfg.a_max);
    return sweep("x-int", params, cfg.parallelism,
                 [](std::int64_t a) -> std::optional<FailureRecord> {
                     std::ostringstream params_str;
                     params_str << "a=" << a;
                     return mismatch(params_str.str(), x_weighted_integral(a),
                                     Rational(1, 2 * a));
                 });
}

struct BooleParam {
    Polynomial f;
    std::int64_t alpha;
    std::int64_t beta;
    unsigned m;
    std::string poly_text;
};

VerificationReport run_boole(const SweepConfig& cfg) {
    constexpr std::size_t kInstances = 200;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> degree_dist(0, 6);
    std::uniform_int_distribution<std::int64_t> alpha_dist(-5, 7);
    std::uniform_int_distribution<unsigned> m_dist(1, 7);

    std::vector<BooleParam> params;
    params.reserve(kInstances);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const int degree = degree_dist(rng);
        std::vector<Rational> coeffs;
        coeffs.reserve(degree + 1);
        for (int c = 0; c <= degree; ++c) {
            coeffs.push_back(random_rational(rng, 9, 9));
        }
        BooleParam prm;
        prm.f = Polynomial(std::move(coeffs));
        prm.alpha = alpha_dist(rng);
        std::uniform_int_distribution<std::int64_t> beta_dist(prm.alpha + 1, 8);
        prm.beta = beta_dist(rng);
        prm.m = m_dist(rng);
        std::ostringstream text;
        text << prm.f;
        prm.poly_text = text.str();
        params.push_back(std::move(prm));
    }
    return sweep("boole", params, cfg.parallelism,
                 [](const BooleParam& prm) -> std::optional<FailureRecord> {
                     const auto [lhs, rhs] =
                         boole_summation_sides(prm.f, prm.alpha, prm.beta, prm.m);
                     std::ostringstream params_str;
                     params_str << "f=" << prm.poly_text << " alpha=" << prm.alpha
                                << " beta=" << prm.beta << " m=" << prm.m;
                     return mismatch(params_str.str(), lhs, rhs);
                 });
}

struct FourierParam {
    unsigned p;
    Rational x;
};

VerificationReport run_fourier(const SweepConfig& cfg) {
    const Rational grid[] = {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                             Rational(2, 3)};
    // Above p = 4 the partial sum reaches the double-precision floor long
    // before 100 terms, so the error comparison would only measure noise.
    const unsigned p_cap = std::min(cfg.p_max, 4u);
    std::vector<FourierParam> params;
    for (unsigned p = 1; p <= p_cap; ++p) {
        for (const Rational& x : grid) {
            params.push_back({p, x});
        }
    }
    const unsigned long terms_hi = std::max<unsigned long>(cfg.fourier_terms, 2);
    const unsigned long terms_lo = std::max<unsigned long>(terms_hi / 100, 1);
    return sweep("fourier", params, cfg.parallelism,
                 [terms_hi, terms_lo](const FourierParam& prm) -> std::optional<FailureRecord> {
                     const FourierApproximation hi = fourier_report(prm.p, prm.x, terms_hi);
                     const FourierApproximation lo = fourier_report(prm.p, prm.x, terms_lo);
                     const double err_hi = hi.abs_error();
                     const double err_lo = lo.abs_error();
                     const bool converged =
                         err_hi < 1e-3 && (err_hi < err_lo || (err_hi == 0.0 && err_lo == 0.0));
                     if (converged) {
                         return std::nullopt;
                     }
                     std::ostringstream params_str;
                     params_str << "p=" << prm.p << " x=" << prm.x.str() << " terms=" << terms_hi
                                << " abs_error=" << format_double(err_hi)
                                << " abs_error_at_" << terms_lo << "=" << format_double(err_lo);
                     return FailureRecord{params_str.str(), format_double(hi.value),
                                          hi.exact.str()};
                 });
}

}  // namespace

const std::vector<std::string>& identity_labels() {
    static const std::vector<std::string> labels = {
        "theorem-1", "theorem-2", "lem-1",    "lem-s3",        "lem-2", "proposition",
        "rho",       "boole",     "pf-def-1", "sign-integral", "x-int", "fourier"};
    return labels;
}

bool is_identity_label(const std::string& label) {
    const auto& labels = identity_labels();
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

VerificationReport run_identity(const std::string& label, const SweepConfig& config) {
    if (label == "theorem-1") {
        return run_theorem(config, true);
    }
    if (label == "theorem-2") {
        return run_theorem(config, false);
    }
    if (label == "lem-1") {
        return run_shift_lemma(config, false);
    }
    if (label == "lem-s3") {
        return run_shift_lemma(config, true);
    }
    if (label == "lem-2") {
        return run_product_integral(config);
    }
    if (label == "proposition") {
        return run_distribution(config);
    }
    if (label == "rho") {
        return run_rho(config);
    }
    if (label == "boole") {
        return run_boole(config);
    }
    if (label == "sign-integral") {
        return run_sign_integral(config);
    }
    if (label == "x-int") {
        return run_x_weighted(config);
    }
    if (label == "pf-def-1") {
        return run_pf_def_1(config);
    }
    if (label == "fourier") {
        return run_fourier(config);
    }
    throw std::invalid_argument("unknown identity \"" + label + "\"");
}

std::vector<VerificationReport> run_identities(const std::vector<std::string>& labels,
                                               const SweepConfig& config) {
    std::vector<VerificationReport> reports;
    reports.reserve(labels.size());
    for (const auto& label : labels) {
        reports.push_back(run_identity(label, config));
    }
    return reports;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json failures = nlohmann::ordered_json::array();
        for (const auto& f : rep.failures) {
            failures.push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        }
        arr.push_back({{"identity", rep.identity},
                       {"instances", rep.instances},
                       {"failures", std::move(failures)}});
    }
    return arr.dump(2);
}

}  // namespace eulersum::verify
