#pragma once

#include "dsum/poly.hpp"
#include "dsum/rational.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dsum {

/// The n-th cyclotomic polynomial Phi_n, monic with integer coefficients.
struct CycloPolyMod {
    long long n = 1;
    Poly<Rational> poly;
};

/// Phi_n by exact division of x^n - 1 by Phi_d over the proper divisors d.
/// Results are cached; the cache is safe for concurrent callers.
const CycloPolyMod& cyclotomic_poly(long long n);

namespace detail {
struct CycloField;
std::shared_ptr<const CycloField> field_for(long long n);
}  // namespace detail

/// Element of Q(zeta_n), stored as the residue of a polynomial in zeta_n
/// modulo Phi_n: exactly phi(n) rational coordinates.
///
/// Level 1 is Q itself and acts as the embedding of the rationals: a level-1
/// element combines with an element of any level. Any other level mismatch
/// throws.
class CycloNum {
public:
    /// Zero of Q.
    CycloNum();
    CycloNum(const Rational& r);
    CycloNum(int v) : CycloNum(Rational(v)) {}
    CycloNum(long v) : CycloNum(Rational(v)) {}
    CycloNum(long long v) : CycloNum(Rational(v)) {}
    /// From coordinates in the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1}.
    /// The vector must have exactly phi(n) entries.
    CycloNum(long long level, std::vector<Rational> coeffs);
    /// Reduces an arbitrary-length coefficient vector modulo Phi_n.
    static CycloNum from_poly(long long level, const std::vector<Rational>& coeffs);

    /// r as an element of Q(zeta_level).
    static CycloNum rational(long long level, const Rational& r);

    long long level() const noexcept;
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Rational value when every coordinate above index 0 vanishes.
    std::optional<Rational> to_rational() const;

    /// Same element at a higher level; only defined from level 1 or to the same level.
    CycloNum lift(long long level) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o);
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend bool operator==(const CycloNum& a, const CycloNum& b);

    /// {"level":n,"coeffs":["a/b",...]}
    std::string json() const;

private:
    CycloNum(std::shared_ptr<const detail::CycloField> f, std::vector<Rational> c)
        : f_(std::move(f)), c_(std::move(c)) {}
    friend CycloNum cyclo_inv(const CycloNum& a);
    friend CycloNum zeta_pow(long long n, long long k);

    std::shared_ptr<const detail::CycloField> f_;
    std::vector<Rational> c_;
};

/// zeta_n^(k mod n).
CycloNum zeta_pow(long long n, long long k);

/// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
/// Throws DivisionByZero for 0.
CycloNum cyclo_inv(const CycloNum& a);

/// a^e, e any integer (negative e inverts first).
CycloNum pow(const CycloNum& a, long long e);

inline std::optional<Rational> is_rational(const CycloNum& a) { return a.to_rational(); }

/// Numerical value under zeta_n -> exp(2 pi i / n), evaluated with MPFR at
/// the requested working precision (>= 53 bits) and rounded to double.
std::complex<double> embed_complex(const CycloNum& a, unsigned precision_bits = 128);

inline std::optional<Rational> as_rational(const CycloNum& x) { return x.to_rational(); }
inline std::string scalar_json_text(const CycloNum& x) { return x.json(); }

using CPoly = Poly<CycloNum>;
using RPoly = Poly<Rational>;

/// Coefficientwise embedding of a rational polynomial.
CPoly lift(const RPoly& f, long long level = 1);

/// Rational polynomial when every coefficient is rational.
std::optional<RPoly> to_rational_poly(const CPoly& f);

}  // namespace dsum
