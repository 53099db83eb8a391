#include "dsum/cyclotomic.hpp"

#include "dsum/arith.hpp"
#include "dsum/errors.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>

namespace dsum {

namespace detail {

struct CycloField {
    long long n = 1;
    std::size_t phi = 1;
    std::vector<long> modulus;                 // Phi_n, low degree first, monic
    std::vector<std::vector<Rational>> powers; // zeta_n^k reduced, 0 <= k < n

    void reduce(std::vector<Rational>& v) const {
        for (std::size_t i = v.size(); i-- > phi;) {
            if (v[i].is_zero()) continue;
            const Rational top = v[i];
            for (std::size_t j = 0; j < phi; ++j) {
                if (modulus[j] == 0) continue;
                v[i - phi + j] -= top * Rational(modulus[j]);
            }
        }
        v.resize(phi);
    }
};

namespace {

std::shared_ptr<const CycloField> build_field(long long n) {
    auto f = std::make_shared<CycloField>();
    f->n = n;
    const auto& phi_n = cyclotomic_poly(n).poly;
    f->phi = phi_n.size() - 1;
    for (const auto& c : phi_n.coeffs()) f->modulus.push_back(c.num().get_si());
    f->powers.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v[static_cast<std::size_t>(k)] = Rational(1);
        if (v.size() < f->phi) v.resize(f->phi);
        f->reduce(v);
        f->powers.push_back(std::move(v));
    }
    return f;
}

}  // namespace

std::shared_ptr<const CycloField> field_for(long long n) {
    if (n < 1) throw InvalidParam("cyclotomic level must be >= 1, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<long long, std::shared_ptr<const CycloField>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto built = build_field(n);
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(built)).first->second;
}

}  // namespace detail

const CycloPolyMod& cyclotomic_poly(long long n) {
    if (n < 1) throw InvalidParam("cyclotomic_poly needs n >= 1, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<const CycloPolyMod>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    RPoly num = RPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - RPoly(Rational(1));
    for (long long d : arith::divisors(n))
        if (d < n) num = divexact(num, cyclotomic_poly(d).poly);
    auto built = std::make_unique<const CycloPolyMod>(CycloPolyMod{n, std::move(num)});
    std::lock_guard lock(mu);
    return *cache.emplace(n, std::move(built)).first->second;
}

namespace {

const std::shared_ptr<const detail::CycloField>& rational_field() {
    static const auto f = detail::field_for(1);
    return f;
}

// Brings a and b to a common field; only level 1 may be promoted.
const std::shared_ptr<const detail::CycloField>& common_field(
    const std::shared_ptr<const detail::CycloField>& a, const std::shared_ptr<const detail::CycloField>& b) {
    if (a == b || a->n == b->n) return a;
    if (a->n == 1) return b;
    if (b->n == 1) return a;
    throw Error("cyclotomic level mismatch: " + std::to_string(a->n) + " vs " + std::to_string(b->n));
}

}  // namespace

CycloNum::CycloNum() : f_(rational_field()), c_(1) {}

CycloNum::CycloNum(const Rational& r) : f_(rational_field()), c_{r} {}

CycloNum::CycloNum(long long level, std::vector<Rational> coeffs) : f_(detail::field_for(level)), c_(std::move(coeffs)) {
    if (c_.size() != f_->phi)
        throw InvalidParam("level " + std::to_string(level) + " needs " + std::to_string(f_->phi) +
                           " coordinates, got " + std::to_string(c_.size()));
}

CycloNum CycloNum::from_poly(long long level, const std::vector<Rational>& coeffs) {
    auto f = detail::field_for(level);
    std::vector<Rational> v = coeffs;
    if (v.size() < f->phi) v.resize(f->phi);
    f->reduce(v);
    return CycloNum(std::move(f), std::move(v));
}

CycloNum CycloNum::rational(long long level, const Rational& r) { return CycloNum(r).lift(level); }

long long CycloNum::level() const noexcept { return f_->n; }

bool CycloNum::is_zero() const noexcept {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloNum::is_one() const noexcept {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> CycloNum::to_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return std::nullopt;
    return c_[0];
}

CycloNum CycloNum::lift(long long level) const {
    if (level == f_->n) return *this;
    if (f_->n != 1) throw Error("cannot move an element of level " + std::to_string(f_->n) + " to level " + std::to_string(level));
    auto f = detail::field_for(level);
    std::vector<Rational> v(f->phi);
    v[0] = c_[0];
    return CycloNum(std::move(f), std::move(v));
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    const auto& f = common_field(f_, o.f_);
    if (f != f_) *this = lift(f->n);
    if (o.f_ == f_ || o.f_->n == f_->n) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        c_[0] += o.c_[0];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    const auto& f = common_field(f_, o.f_);
    if (f != f_) *this = lift(f->n);
    if (o.f_ == f_ || o.f_->n == f_->n) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    } else {
        c_[0] -= o.c_[0];
    }
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    const auto& f = common_field(a.f_, b.f_);
    if (a.f_->phi == 1 && b.f_->phi == 1 && f->phi == 1) return CycloNum(f, {a.c_[0] * b.c_[0]});
    if (a.f_->n == 1 && f->n != 1) {
        CycloNum r = b;
        for (auto& x : r.c_) x *= a.c_[0];
        return r;
    }
    if (b.f_->n == 1 && f->n != 1) {
        CycloNum r = a;
        for (auto& x : r.c_) x *= b.c_[0];
        return r;
    }
    std::vector<Rational> prod(2 * f->phi - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    f->reduce(prod);
    return CycloNum(f, std::move(prod));
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this = *this * cyclo_inv(o); }

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.f_->n == b.f_->n) return a.c_ == b.c_;
    if (a.f_->n == 1) {
        auto r = b.to_rational();
        return r && *r == a.c_[0];
    }
    if (b.f_->n == 1) {
        auto r = a.to_rational();
        return r && *r == b.c_[0];
    }
    return false;
}

std::string CycloNum::json() const {
    std::string out = "{\"level\":" + std::to_string(f_->n) + ",\"coeffs\":[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += '"' + c_[i].str() + '"';
    }
    return out + "]}";
}

CycloNum zeta_pow(long long n, long long k) {
    auto f = detail::field_for(n);
    auto v = f->powers[static_cast<std::size_t>(arith::mod(k, n))];
    return CycloNum(std::move(f), std::move(v));
}

CycloNum cyclo_inv(const CycloNum& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(a.level()) + ")");
    if (a.f_->phi == 1) return CycloNum(a.f_, {Rational(1) / a.c_[0]});
    // Invariant: s_i * a == r_i (mod Phi_n).
    RPoly r0 = cyclotomic_poly(a.level()).poly;
    RPoly r1(a.c_);
    RPoly s0, s1(Rational(1));
    while (r1.size() > 1) {
        auto [quo, rem] = divmod(r0, r1);
        RPoly s2 = s0 - quo * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because Phi_n is irreducible.
    const Rational scale = Rational(1) / r1.lead();
    std::vector<Rational> v = (s1 * scale).coeffs();
    return CycloNum::from_poly(a.level(), v);
}

CycloNum pow(const CycloNum& a, long long e) {
    if (e < 0) return pow(cyclo_inv(a), -e);
    CycloNum result = CycloNum::rational(a.level(), Rational(1));
    CycloNum base = a;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::complex<double> embed_complex(const CycloNum& a, unsigned precision_bits) {
    if (precision_bits < 53) throw InvalidParam("embed_complex needs at least 53 bits of precision");
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    mpfr_t re, im, angle, s, c, coef, tmp;
    for (mpfr_ptr x : {re, im, angle, s, c, coef, tmp}) mpfr_init2(x, prec);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    const long long n = a.level();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        // angle = 2 pi i / n
        mpfr_const_pi(angle, MPFR_RNDN);
        mpfr_mul_ui(angle, angle, 2 * static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_div_ui(angle, angle, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_set_q(coef, a.coeffs()[i].raw().get_mpq_t(), MPFR_RNDN);
        mpfr_mul(tmp, coef, c, MPFR_RNDN);
        mpfr_add(re, re, tmp, MPFR_RNDN);
        mpfr_mul(tmp, coef, s, MPFR_RNDN);
        mpfr_add(im, im, tmp, MPFR_RNDN);
    }
    const std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    for (mpfr_ptr x : {re, im, angle, s, c, coef, tmp}) mpfr_clear(x);
    return out;
}

CPoly lift(const RPoly& f, long long level) {
    return f.map<CycloNum>([level](const Rational& r) { return CycloNum::rational(level, r); });
}

std::optional<RPoly> to_rational_poly(const CPoly& f) {
    std::vector<Rational> v;
    v.reserve(f.size());
    for (const auto& c : f.coeffs()) {
        auto r = c.to_rational();
        if (!r) return std::nullopt;
        v.push_back(*r);
    }
    return RPoly(std::move(v));
}

}  // namespace dsum
