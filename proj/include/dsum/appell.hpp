#pragma once

// Apostol-Bernoulli polynomials B_m(q, lambda), defined by
//     t e^{qt} / (lambda e^t - 1) = sum_m B_m(q, lambda) t^m / m!,
// and generalized Frobenius-Euler polynomials H_m^{(p)}(q, lambda, gamma),
//     (1 - gamma)^p e^{qt} / (lambda e^t - gamma) = sum_m H_m t^m / m!.
//
// The recurrences below come from comparing coefficients of t^m after
// clearing the denominator. The series_oracle_* functions expand the
// generating functions directly and serve as an independent second path.

#include "dsum/cyclotomic.hpp"
#include "dsum/errors.hpp"
#include "dsum/poly.hpp"
#include "dsum/series.hpp"

#include <cstddef>
#include <vector>

namespace dsum {

/// B_0 .. B_{m_max}. For lambda != 1:
///     (lambda - 1) B_m = m q^{m-1} - lambda sum_{i<m} C(m,i) B_i,  B_0 = 0.
/// For lambda == 1 the classical recurrence
///     sum_{i<=m} C(m+1,i) B_i = (m+1) q^m.
template <class S>
std::vector<Poly<S>> apostol_bernoulli_sequence(std::size_t m_max, const S& lambda) {
    std::vector<Poly<S>> out;
    out.reserve(m_max + 1);
    const S one(1);
    if (lambda.is_one()) {
        for (std::size_t m = 0; m <= m_max; ++m) {
            const auto mm = static_cast<long long>(m);
            Poly<S> acc = Poly<S>::monomial(S(Rational(mm + 1)), m);
            for (std::size_t i = 0; i < m; ++i)
                acc -= out[i] * S(binomial(mm + 1, static_cast<long long>(i)));
            out.push_back(acc * S(Rational(1) / Rational(mm + 1)));
        }
        return out;
    }
    const S inv = one / (lambda - one);
    out.emplace_back();
    for (std::size_t m = 1; m <= m_max; ++m) {
        const auto mm = static_cast<long long>(m);
        Poly<S> sum;
        for (std::size_t i = 0; i < m; ++i)
            if (!out[i].is_zero()) sum += out[i] * S(binomial(mm, static_cast<long long>(i)));
        Poly<S> rhs = Poly<S>::monomial(S(Rational(mm)), m - 1) - sum * lambda;
        out.push_back(rhs * inv);
    }
    return out;
}

template <class S>
Poly<S> apostol_bernoulli(std::size_t m, const S& lambda) {
    return apostol_bernoulli_sequence(m, lambda).back();
}

/// B_i(lambda) := B_i(0, lambda).
template <class S>
S apostol_bernoulli_number(std::size_t i, const S& lambda) {
    return apostol_bernoulli(i, lambda).coeff(0);
}

namespace detail {

template <class S>
S one_minus_gamma_pow(long long p, const S& gamma) {
    const S base = S(1) - gamma;
    if (p < 0 && base.is_zero())
        throw InvalidPower("(1 - gamma)^p with p < 0 requires gamma != 1");
    return pow(base, p);
}

template <class S>
void check_collision(const S& lambda, const S& gamma) {
    if ((lambda - gamma).is_zero())
        throw ParameterCollision("Frobenius-Euler polynomial undefined for lambda == gamma");
}

}  // namespace detail

/// H_0 .. H_{m_max} by
///     (lambda - gamma) H_m = (1-gamma)^p q^m - lambda sum_{i<m} C(m,i) H_i.
template <class S>
std::vector<Poly<S>> frobenius_euler_sequence(std::size_t m_max, long long p, const S& lambda, const S& gamma) {
    detail::check_collision(lambda, gamma);
    const S factor = detail::one_minus_gamma_pow(p, gamma);
    const S inv = S(1) / (lambda - gamma);
    std::vector<Poly<S>> out;
    out.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) {
        const auto mm = static_cast<long long>(m);
        Poly<S> sum;
        for (std::size_t i = 0; i < m; ++i)
            if (!out[i].is_zero()) sum += out[i] * S(binomial(mm, static_cast<long long>(i)));
        Poly<S> rhs = Poly<S>::monomial(factor, m) - sum * lambda;
        out.push_back(rhs * inv);
    }
    return out;
}

template <class S>
Poly<S> frobenius_euler(std::size_t m, long long p, const S& lambda, const S& gamma) {
    return frobenius_euler_sequence(m, p, lambda, gamma).back();
}

/// t / (lambda e^{c t} - 1) to order T. When lambda == 1 the factor t is
/// divided out of e^{ct} - 1 first so the inverted series has a unit constant term.
template <class S>
TruncSeries<S> t_over_exp_minus_one(const S& lambda, const S& c, std::size_t order) {
    TruncSeries<S> one = TruncSeries<S>::constant(order + 1, Poly<S>(S(1)));
    if (lambda.is_one()) {
        auto e = series_exp_linear(c, order + 1) - one;
        return e.div_t().inverse();
    }
    auto e = series_exp_linear(c, order) * lambda - one.truncate(order);
    return e.inverse().mul_t();
}

/// B_0 .. B_{m_max} read off t e^{qt} / (lambda e^t - 1).
template <class S>
std::vector<Poly<S>> series_oracle_B(std::size_t m_max, const S& lambda) {
    auto gen = t_over_exp_minus_one(lambda, S(1), m_max) * series_exp_linear(Poly<S>::q(), m_max);
    return gen.coeffs();
}

/// H_0 .. H_{m_max} read off (1-gamma)^p e^{qt} / (lambda e^t - gamma).
template <class S>
std::vector<Poly<S>> series_oracle_H(std::size_t m_max, long long p, const S& lambda, const S& gamma) {
    detail::check_collision(lambda, gamma);
    const S factor = detail::one_minus_gamma_pow(p, gamma);
    // lambda e^t: coefficient m is lambda for every m; subtract gamma at order 0.
    std::vector<Poly<S>> d(m_max + 1, Poly<S>(lambda));
    d[0] = Poly<S>(lambda - gamma);
    auto gen = TruncSeries<S>(m_max, std::move(d)).inverse() * series_exp_linear(Poly<S>::q(), m_max);
    return (gen * factor).coeffs();
}

}  // namespace dsum
