#pragma once

#include "dsum/errors.hpp"
#include "dsum/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dsum {

// Hooks every coefficient ring provides for polynomial formatting. Rational
// is handled here; CycloNum brings its own overloads.
inline std::optional<Rational> as_rational(const Rational& x) { return x; }
inline std::string scalar_json_text(const Rational& x) { return x.str(); }

/// Dense univariate polynomial in q. Coefficient i multiplies q^i; the zero
/// polynomial has no coefficients and the leading coefficient is never zero.
template <class S>
class Poly {
public:
    using scalar_type = S;

    Poly() = default;
    Poly(const S& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const S& c, std::size_t k) {
        if (c.is_zero()) return Poly();
        std::vector<S> v(k + 1, S{});
        v[k] = c;
        return Poly(std::move(v));
    }
    /// The polynomial q.
    static Poly q() { return monomial(S(1), 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<S>& coeffs() const noexcept { return c_; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S{}; }
    const S& lead() const { return c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S{});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S{});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const S& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const S& s) { return a *= s; }
    friend Poly operator*(const S& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Value at x (Horner).
    S operator()(const S& x) const {
        S acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <class T, class F>
    Poly<T> map(F&& f) const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(f(x));
        return Poly<T>(std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<S> c_;
};

/// Quotient and remainder of f by g != 0 over a field.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& f, const Poly<S>& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<S> rem = f.coeffs();
    const std::size_t dg = g.size() - 1;
    if (rem.size() < g.size()) return {Poly<S>(), f};
    std::vector<S> quo(rem.size() - dg, S{});
    const S inv_lead = S(1) / g.lead();
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i].is_zero()) continue;
        const S factor = rem[i] * inv_lead;
        quo[i - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= factor * g.coeffs()[j];
    }
    return {Poly<S>(std::move(quo)), Poly<S>(std::move(rem))};
}

/// h with h * g = f; throws NotDivisible when g does not divide f.
template <class S>
Poly<S> divexact(const Poly<S>& f, const Poly<S>& g) {
    auto [quo, rem] = divmod(f, g);
    if (!rem.is_zero()) throw NotDivisible("polynomial division leaves a nonzero remainder");
    return quo;
}

/// f(q + c).
template <class S>
Poly<S> shift(const Poly<S>& f, const S& c) {
    if (c.is_zero()) return f;
    const Poly<S> lin(std::vector<S>{c, S(1)});
    Poly<S> acc;
    const auto& a = f.coeffs();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * lin + Poly<S>(*it);
    return acc;
}

/// f(c * q).
template <class S>
Poly<S> scale_arg(const Poly<S>& f, const S& c) {
    std::vector<S> v = f.coeffs();
    S pw(1);
    for (auto& x : v) {
        x *= pw;
        pw *= c;
    }
    return Poly<S>(std::move(v));
}

/// Formal derivative d/dq.
template <class S>
Poly<S> derivative(const Poly<S>& f) {
    if (f.size() <= 1) return Poly<S>();
    std::vector<S> v(f.size() - 1, S{});
    for (std::size_t i = 1; i < f.size(); ++i) v[i - 1] = f.coeffs()[i] * S(Rational(static_cast<long>(i)));
    return Poly<S>(std::move(v));
}

template <class S>
Poly<S> pow(const Poly<S>& f, unsigned e) {
    Poly<S> r(S(1));
    for (unsigned i = 0; i < e; ++i) r *= f;
    return r;
}

/// Canonical text form: terms in decreasing degree, e.g. "q^2 - q + 1/6".
/// Rational coefficients print as "a/b"; irrational cyclotomic coefficients
/// print as their JSON object in parentheses.
template <class S>
std::string to_string(const Poly<S>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        const S& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        const std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
        std::string body;
        bool negative = false;
        if (auto r = as_rational(c)) {
            negative = r->sign() < 0;
            const Rational mag = negative ? -*r : *r;
            if (mono.empty())
                body = mag.str();
            else
                body = mag.is_one() ? mono : mag.str() + "*" + mono;
        } else {
            body = "(" + scalar_json_text(c) + ")";
            if (!mono.empty()) body += "*" + mono;
        }
        if (first)
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace dsum
