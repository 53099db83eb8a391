#pragma once

#include "dsum/poly.hpp"

#include <cstddef>
#include <vector>

namespace dsum {

/// Formal power series in t truncated after t^T, with coefficients that are
/// polynomials in q. Storage follows the exponential convention: entry m is
/// the value multiplying t^m/m!.
template <class S>
class TruncSeries {
public:
    using poly_type = Poly<S>;

    explicit TruncSeries(std::size_t order) : c_(order + 1) {}
    TruncSeries(std::size_t order, std::vector<poly_type> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    /// The constant series c.
    static TruncSeries constant(std::size_t order, const poly_type& c) {
        TruncSeries s(order);
        s.c_[0] = c;
        return s;
    }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const std::vector<poly_type>& coeffs() const noexcept { return c_; }
    const poly_type& operator[](std::size_t m) const { return c_.at(m); }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const S& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const S& s) { return a *= s; }
    friend TruncSeries operator*(const S& s, TruncSeries a) { return a *= s; }

    /// Cauchy product; exponential storage turns it into a binomial convolution.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r(a.order());
        for (std::size_t m = 0; m < r.c_.size(); ++m) {
            poly_type acc;
            for (std::size_t i = 0; i <= m; ++i) {
                if (a.c_[i].is_zero() || b.c_[m - i].is_zero()) continue;
                acc += (a.c_[i] * b.c_[m - i]) * S(binomial(static_cast<long long>(m), static_cast<long long>(i)));
            }
            r.c_[m] = std::move(acc);
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    /// Multiplicative inverse modulo t^{T+1}. The constant term must be a
    /// nonzero constant polynomial; otherwise NotAUnit.
    TruncSeries inverse() const {
        const poly_type& a0 = c_[0];
        if (a0.is_zero() || a0.size() != 1)
            throw NotAUnit("series constant term is not a unit");
        const S inv0 = S(1) / a0.lead();
        TruncSeries b(order());
        b.c_[0] = poly_type(inv0);
        for (std::size_t m = 1; m < c_.size(); ++m) {
            poly_type acc;
            for (std::size_t i = 1; i <= m; ++i) {
                if (c_[i].is_zero() || b.c_[m - i].is_zero()) continue;
                acc += (c_[i] * b.c_[m - i]) * S(binomial(static_cast<long long>(m), static_cast<long long>(i)));
            }
            b.c_[m] = acc * (-inv0);
        }
        return b;
    }

    /// t * a, same order. Exponential storage: coefficient m becomes m * a_{m-1}.
    TruncSeries mul_t() const {
        TruncSeries r(order());
        for (std::size_t m = 1; m < c_.size(); ++m)
            r.c_[m] = c_[m - 1] * S(Rational(static_cast<long>(m)));
        return r;
    }

    /// a / t for a series with zero constant term; the order drops by one.
    TruncSeries div_t() const {
        if (!c_[0].is_zero()) throw NotDivisible("series with nonzero constant term is not divisible by t");
        if (order() == 0) throw NotDivisible("order-0 series cannot be divided by t");
        TruncSeries r(order() - 1);
        for (std::size_t m = 0; m + 1 < c_.size(); ++m)
            r.c_[m] = c_[m + 1] * (S(1) / S(Rational(static_cast<long>(m + 1))));
        return r;
    }

    /// Same series truncated to a lower (or equal) order.
    TruncSeries truncate(std::size_t order) const {
        if (order > this->order()) throw Error("cannot extend a truncated series");
        return TruncSeries(order, std::vector<poly_type>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

private:
    void check_order(const TruncSeries& o) const {
        if (o.c_.size() != c_.size()) throw Error("series truncation orders differ");
    }

    std::vector<poly_type> c_;
};

/// e^{c t} to order T: coefficient m is c^m.
template <class S>
TruncSeries<S> series_exp_linear(const Poly<S>& c, std::size_t order) {
    std::vector<Poly<S>> v(order + 1);
    v[0] = Poly<S>(S(1));
    for (std::size_t m = 1; m <= order; ++m) v[m] = v[m - 1] * c;
    return TruncSeries<S>(order, std::move(v));
}

template <class S>
TruncSeries<S> series_exp_linear(const S& c, std::size_t order) {
    return series_exp_linear(Poly<S>(c), order);
}

}  // namespace dsum
