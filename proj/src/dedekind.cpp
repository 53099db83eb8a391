#include "dsum/dedekind.hpp"

#include "dsum/appell.hpp"
#include "dsum/errors.hpp"

namespace dsum {

void check_lambda_collision(long long n, const CycloNum& lambda) {
    const CycloNum l = lambda.lift(n);
    for (long long k = 1; k < n; ++k)
        if (l == zeta_pow(n, -k))
            throw ParameterCollision("lambda equals zeta_" + std::to_string(n) + "^-" + std::to_string(k) +
                                         " (k = " + std::to_string(k) + ")",
                                     k);
}

namespace {

// Per-root weights zeta^{-kr} C_{-k} (1 - zeta^k)^{-p} times H_0..H_{m_max-1}.
std::vector<CPoly> root_term(std::size_t m_max, long long r, long long p, const CycloNum& lambda,
                             const PeriodicSeq& C, long long k) {
    const long long n = C.n();
    const CycloNum one = CycloNum::rational(n, Rational(1));
    const CycloNum weight = zeta_pow(n, -k * r) * C[-k] * pow(one - zeta_pow(n, k), -p);
    if (weight.is_zero()) return std::vector<CPoly>(m_max);
    auto H = frobenius_euler_sequence(m_max - 1, p, lambda, zeta_pow(n, -k));
    for (auto& h : H) h *= weight;
    return H;
}

std::vector<CPoly> e_sum_sequence_impl(std::size_t m_max, long long r, long long p, const CycloNum& lambda,
                                       const PeriodicSeq& C, bool parallel) {
    if (m_max < 1) throw InvalidParam("E-sum needs m >= 1");
    const long long n = C.n();
    const CycloNum l = lambda.lift(n);
    check_lambda_collision(n, l);
    std::vector<std::vector<CPoly>> terms(static_cast<std::size_t>(n - 1));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long k = 1; k < n; ++k) terms[static_cast<std::size_t>(k - 1)] = root_term(m_max, r, p, l, C, k);
    std::vector<CPoly> out(m_max);
    for (const auto& t : terms)
        for (std::size_t i = 0; i < m_max; ++i) out[i] += t[i];
    return out;
}

}  // namespace

CPoly e_sum(const ESumParams& params) {
    if (params.m < 1) throw InvalidParam("E-sum needs m >= 1");
    return e_sum_sequence_impl(static_cast<std::size_t>(params.m), params.r, params.p, params.lambda, params.C, true)
        .back();
}

std::vector<CPoly> e_sum_sequence(std::size_t m_max, long long r, long long p, const CycloNum& lambda,
                                  const PeriodicSeq& C) {
    return e_sum_sequence_impl(m_max, r, p, lambda, C, true);
}

namespace serial {

CPoly e_sum(const ESumParams& params) {
    if (params.m < 1) throw InvalidParam("E-sum needs m >= 1");
    return e_sum_sequence_impl(static_cast<std::size_t>(params.m), params.r, params.p, params.lambda, params.C, false)
        .back();
}

std::vector<CPoly> e_sum_sequence(std::size_t m_max, long long r, long long p, const CycloNum& lambda,
                                  const PeriodicSeq& C) {
    return e_sum_sequence_impl(m_max, r, p, lambda, C, false);
}

}  // namespace serial

TruncSeries<CycloNum> g_series_oracle(long long r, long long p, const CycloNum& lambda, const PeriodicSeq& C,
                                      std::size_t order) {
    const long long n = C.n();
    const CycloNum l = lambda.lift(n);
    check_lambda_collision(n, l);
    TruncSeries<CycloNum> sum(order);
    for (long long k = 1; k < n; ++k) {
        const CycloNum weight = zeta_pow(n, -k) * zeta_pow(n, -k * (r + p - 1)) * C[-k];
        if (weight.is_zero()) continue;
        std::vector<CPoly> d(order + 1, CPoly(l));
        d[0] = CPoly(l - zeta_pow(n, -k));
        sum += TruncSeries<CycloNum>(order, std::move(d)).inverse() * weight;
    }
    if (p % 2 != 0) sum = -sum;
    return sum * series_exp_linear(CPoly::q(), order);
}

Rational ramanujan_sum(long long n, long long k) {
    CycloNum acc = CycloNum::rational(n, Rational(0));
    for (long long j : arith::totatives(n)) acc += zeta_pow(n, k * j);
    auto r = acc.to_rational();
    if (!r) throw Error("Ramanujan sum c_" + std::to_string(n) + "(" + std::to_string(k) + ") came out irrational");
    return *r;
}

}  // namespace dsum
