#pragma once

#include "dsum/arith.hpp"
#include "dsum/cyclotomic.hpp"
#include "dsum/series.hpp"
#include "dsum/spectra.hpp"

#include <cstddef>
#include <vector>

namespace dsum {

/// Parameters of the Dedekind-type sum
///     E_{m,n}^{r,p}(q, lambda; C) =
///         sum_{k=1}^{n-1} zeta^{-kr} H_{m-1}^{(p)}(q, lambda, zeta^{-k}) C_{-k} / (1 - zeta^k)^p
/// with zeta = zeta_n. The result is a polynomial in q; n is C.n().
struct ESumParams {
    long long m = 1;
    long long r = 0;
    long long p = 0;
    CycloNum lambda;
    PeriodicSeq C;

    long long n() const { return C.n(); }
};

/// Throws ParameterCollision (carrying k) when lambda == zeta_n^{-k} for some 1 <= k < n.
void check_lambda_collision(long long n, const CycloNum& lambda);

/// E_{m,n}^{r,p} as a polynomial in q of degree <= m-1. The n-1 terms are
/// evaluated in parallel and summed in index order.
CPoly e_sum(const ESumParams& params);

/// E_1 .. E_{m_max} for the same (n, r, p, lambda, C), sharing one
/// Frobenius-Euler recurrence per root. Entry i holds E_{i+1}.
std::vector<CPoly> e_sum_sequence(std::size_t m_max, long long r, long long p, const CycloNum& lambda,
                                  const PeriodicSeq& C);

namespace serial {
CPoly e_sum(const ESumParams& params);
std::vector<CPoly> e_sum_sequence(std::size_t m_max, long long r, long long p, const CycloNum& lambda,
                                  const PeriodicSeq& C);
}  // namespace serial

/// G(q, lambda, t; C) = sum_m E_{m+1} t^m/m!, expanded from the closed form
///     (-1)^p sum_{k=1}^{n-1} zeta^{-k} zeta^{-k(r+p-1)} C_{-k} e^{qt} / (lambda e^t - zeta^{-k})
/// to order T.
TruncSeries<CycloNum> g_series_oracle(long long r, long long p, const CycloNum& lambda, const PeriodicSeq& C,
                                      std::size_t order);

/// V_n^{(k)}(lambda) = sum over totatives j of n of j^k lambda^j.
template <class S>
S v_sum(long long n, long long k, const S& lambda) {
    S acc{};
    for (long long j : arith::totatives(n)) acc += S(pow(Rational(j), k)) * pow(lambda, j);
    return acc;
}

/// Ramanujan sum c_n(k) = sum over totatives j of n of zeta_n^{kj}; always rational.
Rational ramanujan_sum(long long n, long long k);

}  // namespace dsum
