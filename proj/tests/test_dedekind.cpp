#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/appell.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

using namespace dsum;
using cd = std::complex<double>;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

cd root(long long n, long long k) { return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)); }

// Frobenius-Euler value H_{m}(q0, lambda, gamma) in floating point, from the
// recurrence evaluated pointwise.
cd float_H(long long m, long long p, cd q0, cd lambda, cd gamma) {
    const cd f = std::pow(1.0 - gamma, static_cast<double>(p));
    std::vector<cd> H;
    cd qj = 1;
    for (long long j = 0; j <= m; ++j, qj *= q0) {
        cd sum = 0;
        for (long long i = 0; i < j; ++i) sum += std::tgamma(j + 1.0) / (std::tgamma(i + 1.0) * std::tgamma(j - i + 1.0)) * H[static_cast<std::size_t>(i)];
        H.push_back((f * qj - lambda * sum) / (lambda - gamma));
    }
    return H.back();
}

// Direct floating evaluation of the E-sum with weights supplied as a function of k.
template <class W>
cd float_e_sum(long long m, long long n, long long r, long long p, cd q0, cd lambda, W weight_minus_k) {
    cd sum = 0;
    for (long long k = 1; k < n; ++k)
        sum += root(n, -k * r) * float_H(m - 1, p, q0, lambda, root(n, -k)) * weight_minus_k(k) /
               std::pow(1.0 - root(n, k), static_cast<double>(p));
    return sum;
}

bool rel_close(cd a, cd b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

int brute_moebius(long long n) {
    // mu from sum_{d|n} mu(d) = [n == 1]
    if (n == 1) return 1;
    int s = 0;
    for (long long d = 1; d < n; ++d)
        if (n % d == 0) s += brute_moebius(d);
    return -s;
}

}  // namespace

TEST_CASE("arithmetic functions") {
    CHECK(arith::euler_phi(6) == 2);
    CHECK(arith::moebius(6) == 1);
    CHECK(arith::totatives(6) == std::vector<long long>{1, 5});
    CHECK(arith::moebius(4) == 0);
    CHECK(arith::divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    int s = 0;
    for (long long d : arith::divisors(6)) s += arith::moebius(d);
    CHECK(s == 0);
    for (long long n = 1; n <= 60; ++n) {
        long long count = 0;
        for (long long j = 1; j <= n; ++j) count += std::gcd(j, n) == 1;
        CHECK(arith::euler_phi(n) == count);
        CHECK(arith::moebius(n) == brute_moebius(n));
        CHECK(static_cast<long long>(arith::totatives(n).size()) == count);
    }
    CHECK(arith::mod(-7, 3) == 2);
    CHECK_THROWS_AS(arith::euler_phi(0), InvalidParam);
}

TEST_CASE("e_sum examples") {
    for (long long n = 2; n <= 6; ++n)
        for (long long m = 1; m <= 4; ++m)
            for (long long p : {-1, 0, 2})
                CHECK(e_sum(ESumParams{m, 1, p, CycloNum(R("3")), family("delta", n)}).is_zero());

    // n = 2, m = 1, r = 0, p = 1, lambda = 2, C = (0, 1): single term 1/3.
    const PeriodicSeq C(2, {CycloNum(0), CycloNum(1)});
    const CPoly E = e_sum(ESumParams{1, 0, 1, CycloNum(R("2")), C});
    CHECK(E == CPoly(CycloNum(R("1/3"))));
    CHECK(to_string(E) == "1/3");
}

TEST_CASE("e_sum collisions name the root") {
    try {
        e_sum(ESumParams{2, 0, 1, CycloNum(-1), family("ramanujan", 6)});
        FAIL("expected a collision");
    } catch (const ParameterCollision& e) {
        CHECK(e.k() == 3);
    }
    CHECK_NOTHROW(e_sum(ESumParams{2, 0, 1, CycloNum(-1), family("ramanujan", 5)}));
    // a cyclotomic lambda can collide at any k
    try {
        e_sum(ESumParams{1, 0, 0, zeta_pow(5, -2), family("delta", 5)});
        FAIL("expected a collision");
    } catch (const ParameterCollision& e) {
        CHECK(e.k() == 2);
    }
    CHECK_THROWS_AS(e_sum(ESumParams{0, 0, 0, CycloNum(2), family("delta", 3)}), InvalidParam);
}

TEST_CASE("e_sum degree bound and serial reference") {
    for (long long n = 2; n <= 7; ++n)
        for (long long m = 1; m <= 5; ++m) {
            const PeriodicSeq C = random_rational_sequence(n, static_cast<std::uint64_t>(m * 31 + n));
            const ESumParams params{m, 2, -1, CycloNum(R("5/7")), C};
            const CPoly E = e_sum(params);
            CHECK((E.is_zero() || *E.degree() <= static_cast<std::size_t>(m - 1)));
            CHECK(E == serial::e_sum(params));
            CHECK(e_sum_sequence(static_cast<std::size_t>(m), 2, -1, CycloNum(R("5/7")), C).back() == E);
        }
}

TEST_CASE("e_sum agrees with direct floating evaluation") {
    for (long long n = 2; n <= 7; ++n)
        for (long long m = 1; m <= 4; ++m)
            for (long long p : {-1, 0, 1, 2}) {
                const PeriodicSeq C = random_rational_sequence(n, static_cast<std::uint64_t>(n + 17 * m));
                const Rational lambda = R("-3/2");
                const CPoly E = e_sum(ESumParams{m, 1, p, CycloNum(lambda), C});
                const Rational q0 = R("2/5");
                const cd exact = embed_complex(E(CycloNum(q0)));
                const cd approx = float_e_sum(m, n, 1, p, cd(q0.to_double()), cd(lambda.to_double()),
                                              [&](long long k) { return cd(C[-k].to_rational()->to_double()); });
                CHECK(rel_close(exact, approx, 1e-9));
            }
}

TEST_CASE("classical instances are rational") {
    for (long long n = 2; n <= 12; ++n)
        for (long long a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            const PeriodicSeq fd = family("fourier-dedekind:a=" + std::to_string(a), n);
            for (long long r = 0; r <= 2; ++r) {
                const CPoly E = e_sum(ESumParams{1, r, 1, CycloNum(1), fd});
                CHECK(to_rational_poly(E).has_value());
                const cd approx = float_e_sum(1, n, r, 1, 0.0, 1.0, [&](long long k) { return 1.0 / (1.0 - root(n, a * k)); });
                CHECK(rel_close(embed_complex(E(CycloNum(0))), approx, 1e-9));
            }
            const PeriodicSeq ad = family("apostol-dedekind:a=" + std::to_string(a), n);
            for (long long m = 2; m <= 6; ++m) {
                const CycloNum v = e_sum(ESumParams{m, 0, 1, CycloNum(1), ad})(CycloNum(0));
                CHECK(is_rational(v).has_value());
                const cd approx = float_e_sum(m, n, 0, 1, 0.0, 1.0, [&](long long k) { return 1.0 / (1.0 - root(n, -a * k)); });
                CHECK(rel_close(embed_complex(v), approx, 1e-9));
            }
        }
}

TEST_CASE("g_series_oracle coefficients are the shifted E-sums") {
    for (long long n = 2; n <= 6; ++n)
        for (long long p : {-1, 0, 1, 2}) {
            const PeriodicSeq C = random_rational_sequence(n, static_cast<std::uint64_t>(100 + n));
            const CycloNum lambda(R("2"));
            const auto G = g_series_oracle(1, p, lambda, C, 6);
            const auto E = e_sum_sequence(7, 1, p, lambda, C);
            for (std::size_t m = 0; m <= 6; ++m) CHECK(G[m] == E[m]);
        }
    const auto Gd = g_series_oracle(0, 1, CycloNum(3), family("delta", 4), 5);
    for (const auto& c : Gd.coeffs()) CHECK(c.is_zero());
    const PeriodicSeq C(2, {CycloNum(0), CycloNum(1)});
    CHECK(g_series_oracle(0, 1, CycloNum(2), C, 0)[0] == CPoly(CycloNum(R("1/3"))));
    CHECK_THROWS_AS(g_series_oracle(0, 1, CycloNum(-1), family("delta", 4), 3), ParameterCollision);
}

TEST_CASE("v_sum") {
    CHECK(v_sum(6, 0, Rational(1)) == Rational(2));
    CHECK(v_sum(6, 1, Rational(1)) == Rational(6));
    CHECK(v_sum(6, 0, Rational(2)) == Rational(34));
    for (long long n = 2; n <= 20; ++n) {
        CHECK(v_sum(n, 0, Rational(1)) == Rational(arith::euler_phi(n)));
        CHECK(v_sum(n, 1, Rational(1)) == Rational(n * arith::euler_phi(n)) / Rational(2));
    }
    // cyclotomic lambda goes through the same template
    CHECK(v_sum(4, 2, zeta_pow(4, 1)) == zeta_pow(4, 1) + CycloNum(9) * zeta_pow(4, 3));
}

TEST_CASE("ramanujan_sum") {
    CHECK(ramanujan_sum(6, 2) == Rational(-1));
    for (long long n = 1; n <= 20; ++n) {
        CHECK(ramanujan_sum(n, 0) == Rational(arith::euler_phi(n)));
        CHECK(ramanujan_sum(n, 1) == Rational(arith::moebius(n)));
        for (long long k = 0; k < n; ++k) {
            const long long g = std::gcd(k, n);
            const Rational hoelder = Rational(arith::moebius(n / g) * arith::euler_phi(n)) / Rational(arith::euler_phi(n / g));
            CHECK(ramanujan_sum(n, k) == hoelder);
        }
    }
}
