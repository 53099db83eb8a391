#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/errors.hpp"
#include "dsum/poly.hpp"
#include "dsum/rational.hpp"
#include "dsum/series.hpp"

#include <random>

using namespace dsum;
using RP = Poly<Rational>;
using RS = TruncSeries<Rational>;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

RP P(std::initializer_list<const char*> low_to_high) {
    std::vector<Rational> v;
    for (auto s : low_to_high) v.push_back(R(s));
    return RP(std::move(v));
}

struct Gen {
    std::mt19937_64 rng{12345};
    Rational rational() {
        const long num = static_cast<long>(rng() % 21) - 10;
        const long den = static_cast<long>(rng() % 6) + 1;
        return Rational(mpz_class(num), mpz_class(den));
    }
    RP poly(std::size_t max_len = 5) {
        std::vector<Rational> v(rng() % (max_len + 1));
        for (auto& x : v) x = rational();
        return RP(std::move(v));
    }
    RS series(std::size_t order) {
        std::vector<RP> v(order + 1);
        for (auto& x : v) x = poly(3);
        return RS(order, std::move(v));
    }
};

}  // namespace

TEST_CASE("rational canonical form and text") {
    CHECK(R("6/4").str() == "3/2");
    CHECK(R("-6/4").str() == "-3/2");
    CHECK(R("0/7").str() == "0");
    CHECK(R("0/7").den() == 1);
    CHECK(R("12").str() == "12");
    CHECK(R("+3/9").str() == "1/3");
    CHECK_THROWS_AS(R("1/0"), ParseError);
    CHECK_THROWS_AS(R("1/-2"), ParseError);
    CHECK_THROWS_AS(R("x"), ParseError);
    CHECK_THROWS_AS(R(""), ParseError);
    CHECK_THROWS_AS(R(" 1"), ParseError);
    CHECK_THROWS_AS(R("1") / R("0"), DivisionByZero);
    CHECK(pow(R("2/3"), -2) == R("9/4"));
    CHECK(binomial(6, 2) == Rational(15));
    CHECK(factorial(5) == Rational(120));
    CHECK(Rational(static_cast<long long>(1) << 62).str() == "4611686018427387904");
}

TEST_CASE("rational ring axioms on random triples") {
    Gen g;
    for (int i = 0; i < 200; ++i) {
        const Rational a = g.rational(), b = g.rational(), c = g.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("poly_mul examples") {
    CHECK(P({"1", "1"}) * P({"-1", "1"}) == P({"-1", "0", "1"}));
    CHECK((P({"1", "1"}) * RP()).is_zero());
    CHECK(P({"1", "0", "1"}) * P({"0", "0", "0", "1"}) == P({"0", "0", "0", "1", "0", "1"}));
    CHECK(to_string(P({"-1", "0", "1"})) == "q^2 - 1");
}

TEST_CASE("zero polynomial has no degree") {
    RP z;
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    CHECK(RP(std::vector<Rational>{R("0"), R("0")}).is_zero());
    CHECK(P({"3"}).degree() == 0u);
    CHECK(to_string(z) == "0");
}

TEST_CASE("poly_divexact examples") {
    CHECK(divexact(P({"-1", "0", "0", "0", "0", "0", "1"}), P({"-1", "0", "1"})) == P({"1", "0", "1", "0", "1"}));
    for (std::size_t n = 1; n <= 9; ++n) {
        const RP qn1 = RP::monomial(Rational(1), n) - RP(Rational(1));
        RP geo;
        for (std::size_t i = 0; i < n; ++i) geo += RP::monomial(Rational(1), i);
        CHECK(divexact(qn1, P({"-1", "1"})) == geo);
    }
    CHECK_THROWS_AS(divexact(P({"1", "0", "1"}), P({"1", "1"})), NotDivisible);
    CHECK_THROWS_AS(divexact(P({"1"}), RP()), DivisionByZero);
}

TEST_CASE("poly_shift examples") {
    CHECK(shift(P({"0", "0", "1"}), R("1")) == P({"1", "2", "1"}));
    const RP f = P({"3", "-1/2", "0", "7"});
    CHECK(shift(f, R("0")) == f);
    CHECK(shift(P({"0", "1"}), R("1/2")) == P({"1/2", "1"}));
    CHECK(scale_arg(P({"1", "1", "1"}), R("2")) == P({"1", "2", "4"}));
}

TEST_CASE("poly ring axioms, division and shift round trips") {
    Gen g;
    for (int i = 0; i < 150; ++i) {
        const RP a = g.poly(), b = g.poly(), c = g.poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());
        if (!b.is_zero()) CHECK(divexact(a * b, b) == a);
        const Rational s = g.rational();
        CHECK(shift(shift(a, s), -s) == a);
        auto [quo, rem] = divmod(a, b.is_zero() ? P({"1"}) : b);
        CHECK(quo * (b.is_zero() ? P({"1"}) : b) + rem == a);
    }
}

TEST_CASE("derivative and evaluation") {
    const RP f = P({"1", "2", "3"});
    CHECK(derivative(f) == P({"2", "6"}));
    CHECK(derivative(P({"5"})).is_zero());
    CHECK(f(R("2")) == Rational(17));
}

TEST_CASE("series_mul examples") {
    const std::size_t T = 6;
    const auto e1 = series_exp_linear(RP::q(), T);
    const auto e2 = series_exp_linear(P({"0", "3"}), T);
    CHECK(e1 * e2 == series_exp_linear(P({"0", "4"}), T));

    const RS one = RS::constant(T, RP(Rational(1)));
    Gen g;
    const RS a = g.series(T);
    CHECK(a * one == a);

    // t stored exponentially: coefficient 1 is 1!*1 = 1.
    RS t(2, {RP(), RP(Rational(1)), RP()});
    const RS tt = t * t;
    CHECK(tt[0].is_zero());
    CHECK(tt[1].is_zero());
    CHECK(tt[2] == RP(Rational(2)));
}

TEST_CASE("series_inv examples") {
    // 1 - t, inverse sum t^m, exponential coefficients m!.
    const std::size_t T = 4;
    RS a(T, {RP(Rational(1)), RP(Rational(-1))});
    const RS inv = a.inverse();
    for (std::size_t m = 0; m <= T; ++m) CHECK(inv[m] == RP(factorial(static_cast<long long>(m))));

    RS zero_const(T, {RP(), RP(Rational(1))});
    CHECK_THROWS_AS(zero_const.inverse(), NotAUnit);
    // q is not a unit of Q[q].
    RS poly_const(T, {RP::q()});
    CHECK_THROWS_AS(poly_const.inverse(), NotAUnit);

    Gen g;
    for (int i = 0; i < 40; ++i) {
        RS s = g.series(5);
        std::vector<RP> v = s.coeffs();
        v[0] = RP(g.rational() + Rational(11));  // nonzero constant
        s = RS(5, v);
        CHECK(s * s.inverse() == RS::constant(5, RP(Rational(1))));
        CHECK(s.inverse().inverse() == s);
    }
}

TEST_CASE("series ring axioms") {
    Gen g;
    for (int i = 0; i < 100; ++i) {
        const RS a = g.series(4), b = g.series(4), c = g.series(4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("series_exp_linear examples") {
    CHECK(series_exp_linear(RP(), 3) == RS::constant(3, RP(Rational(1))));
    const auto e = series_exp_linear(RP::q(), 3);
    for (std::size_t m = 0; m <= 3; ++m) CHECK(e[m] == RP::monomial(Rational(1), m));
    const auto e2 = series_exp_linear(P({"0", "2"}), 5);
    for (std::size_t m = 0; m <= 5; ++m) CHECK(e2[m] == pow(P({"0", "2"}), static_cast<unsigned>(m)));
}

TEST_CASE("multiplying and dividing by t") {
    const auto e = series_exp_linear(RP(Rational(1)), 5);
    const auto t_e = e.mul_t();
    CHECK(t_e[0].is_zero());
    CHECK(t_e.div_t() == e.truncate(4));
    // (e^t - 1)/t has exponential coefficients 1/(m+1).
    const auto em1 = e - RS::constant(5, RP(Rational(1)));
    const auto q = em1.div_t();
    for (std::size_t m = 0; m <= 4; ++m) CHECK(q[m] == RP(Rational(1) / Rational(static_cast<long>(m + 1))));
    CHECK_THROWS_AS(e.div_t(), NotDivisible);
}
