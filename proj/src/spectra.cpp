#include "dsum/spectra.hpp"

#include "dsum/arith.hpp"
#include "dsum/errors.hpp"

#include <charconv>
#include <random>

namespace dsum {

namespace detail {

template <class Tag>
Periodic<Tag>::Periodic(long long n, std::vector<CycloNum> values) : n_(n), v_(std::move(values)) {
    if (n < 2) throw InvalidParam("periodic sequence needs period n >= 2, got " + std::to_string(n));
    if (static_cast<long long>(v_.size()) != n)
        throw InvalidParam("sequence of period " + std::to_string(n) + " has " + std::to_string(v_.size()) + " values");
    for (auto& x : v_) x = x.lift(n);
}

template <class Tag>
const CycloNum& Periodic<Tag>::operator[](long long k) const {
    return v_[static_cast<std::size_t>(arith::mod(k, n_))];
}

}  // namespace detail

template class detail::Periodic<detail::PeriodicTag>;
template class detail::Periodic<detail::SpectralTag>;

namespace {

// out_k = scale * sum_j in_j zeta^{sign * k j}
std::vector<CycloNum> transform_entry_range(const std::vector<CycloNum>& in, long long n, int sign,
                                            const CycloNum& scale, bool parallel) {
    std::vector<CycloNum> zeta(static_cast<std::size_t>(n));
    for (long long e = 0; e < n; ++e) zeta[static_cast<std::size_t>(e)] = zeta_pow(n, e);
    std::vector<CycloNum> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (parallel)
    for (long long k = 0; k < n; ++k) {
        CycloNum acc = CycloNum::rational(n, Rational(0));
        for (long long j = 0; j < n; ++j) {
            const auto& x = in[static_cast<std::size_t>(j)];
            if (x.is_zero()) continue;
            acc += x * zeta[static_cast<std::size_t>(arith::mod(sign * k * j, n))];
        }
        out[static_cast<std::size_t>(k)] = acc * scale;
    }
    return out;
}

PeriodicSeq forward_impl(const SpectralSeq& K, bool parallel) {
    return PeriodicSeq(K.n(), transform_entry_range(K.values(), K.n(), +1, CycloNum(1), parallel));
}

SpectralSeq inverse_impl(const PeriodicSeq& C, bool parallel) {
    const CycloNum scale(Rational(1) / Rational(C.n()));
    return SpectralSeq(C.n(), transform_entry_range(C.values(), C.n(), -1, scale, parallel));
}

long long parse_int_field(std::string_view text, std::string_view what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
    return v;
}

}  // namespace

PeriodicSeq dft_forward(const SpectralSeq& K) { return forward_impl(K, true); }
SpectralSeq dft_inverse(const PeriodicSeq& C) { return inverse_impl(C, true); }

namespace serial {
PeriodicSeq dft_forward(const SpectralSeq& K) { return forward_impl(K, false); }
SpectralSeq dft_inverse(const PeriodicSeq& C) { return inverse_impl(C, false); }
}  // namespace serial

SequenceDescriptor SequenceDescriptor::parse(std::string_view text) {
    SequenceDescriptor d;
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (name == "delta" || name == "ramanujan") {
        if (!args.empty()) throw ParseError("sequence '" + std::string(name) + "' takes no parameters");
        d.kind = name == "delta" ? Kind::Delta : Kind::Ramanujan;
        return d;
    }
    if (name == "random") {
        d.kind = Kind::Random;
        d.index = args.empty() ? 0 : parse_int_field(args, "random index");
        if (d.index < 0) throw ParseError("random index must be >= 0");
        return d;
    }
    if (name != "fourier-dedekind" && name != "apostol-dedekind")
        throw ParseError("unknown sequence family '" + std::string(name) + "'");
    d.kind = name == "fourier-dedekind" ? Kind::FourierDedekind : Kind::ApostolDedekind;
    bool have_a = false;
    std::string_view rest = args;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(text) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "a") {
            d.a = parse_int_field(value, "a");
            have_a = true;
        } else if (key == "c0") {
            d.c0 = Rational::parse(value);
        } else {
            throw ParseError("unknown parameter '" + std::string(key) + "' in '" + std::string(text) + "'");
        }
    }
    if (!have_a) throw ParseError("family '" + std::string(name) + "' requires a=<int>");
    return d;
}

std::string SequenceDescriptor::str() const {
    switch (kind) {
    case Kind::Delta: return "delta";
    case Kind::Ramanujan: return "ramanujan";
    case Kind::Random: return "random:" + std::to_string(index);
    case Kind::FourierDedekind:
    case Kind::ApostolDedekind: {
        std::string s = kind == Kind::FourierDedekind ? "fourier-dedekind" : "apostol-dedekind";
        s += ":a=" + std::to_string(a);
        if (c0) s += ",c0=" + c0->str();
        return s;
    }
    }
    return {};
}

bool SequenceDescriptor::needs_explicit_c0() const {
    return kind == Kind::FourierDedekind || kind == Kind::ApostolDedekind;
}

PeriodicSeq random_rational_sequence(long long n, std::uint64_t seed) {
    // Raw engine output only; distribution objects differ between standard libraries.
    std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
    std::vector<CycloNum> v;
    v.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        const long num = static_cast<long>(gen() % 19) - 9;
        const long den = static_cast<long>(gen() % 5) + 1;
        v.emplace_back(Rational(mpz_class(num), mpz_class(den)));
    }
    return PeriodicSeq(n, std::move(v));
}

PeriodicSeq family(const SequenceDescriptor& desc, long long n, std::uint64_t seed) {
    using Kind = SequenceDescriptor::Kind;
    if (n < 2) throw InvalidParam("sequence period must be >= 2");
    std::vector<CycloNum> v(static_cast<std::size_t>(n), CycloNum::rational(n, Rational(0)));
    switch (desc.kind) {
    case Kind::Delta:
        v[0] = CycloNum::rational(n, Rational(n));
        return PeriodicSeq(n, std::move(v));
    case Kind::Ramanujan: {
        // spectrum: K_j = 1 on totatives of n
        std::vector<CycloNum> K(static_cast<std::size_t>(n), CycloNum::rational(n, Rational(0)));
        for (long long j : arith::totatives(n)) K[static_cast<std::size_t>(j % n)] = CycloNum::rational(n, Rational(1));
        return dft_forward(SpectralSeq(n, std::move(K)));
    }
    case Kind::Random: {
        std::uint64_t s = seed;
        s = s * 1000003ULL + static_cast<std::uint64_t>(desc.index);
        return random_rational_sequence(n, s);
    }
    case Kind::FourierDedekind:
    case Kind::ApostolDedekind: {
        if (arith::gcd(desc.a, n) != 1)
            throw InvalidParam("family " + desc.str() + " needs gcd(a, n) = 1 but gcd(" + std::to_string(desc.a) +
                               ", " + std::to_string(n) + ") = " + std::to_string(arith::gcd(desc.a, n)));
        const long long sign = desc.kind == Kind::FourierDedekind ? -1 : 1;
        const CycloNum one = CycloNum::rational(n, Rational(1));
        for (long long k = 1; k < n; ++k)
            v[static_cast<std::size_t>(k)] = cyclo_inv(one - zeta_pow(n, sign * desc.a * k));
        v[0] = CycloNum::rational(n, desc.c0.value_or(Rational(0)));
        return PeriodicSeq(n, std::move(v));
    }
    }
    throw InvalidParam("unhandled sequence kind");
}

PeriodicSeq family(std::string_view desc, long long n, std::uint64_t seed) {
    return family(SequenceDescriptor::parse(desc), n, seed);
}

CPoly interp_poly(const SpectralSeq& K, long long r) {
    std::vector<CycloNum> c;
    c.reserve(static_cast<std::size_t>(K.n()));
    for (long long j = 0; j < K.n(); ++j) c.push_back(K[j - r]);
    return CPoly(std::move(c));
}

CPoly lagrange_oracle(const PeriodicSeq& C, long long r) {
    const long long n = C.n();
    std::vector<CycloNum> nodes;
    for (long long k = 0; k < n; ++k) nodes.push_back(zeta_pow(n, -k));
    CPoly result;
    for (long long k = 0; k < n; ++k) {
        const CycloNum value = zeta_pow(n, -k * r) * C[-k];
        if (value.is_zero()) continue;
        CPoly basis(CycloNum::rational(n, Rational(1)));
        CycloNum denom = CycloNum::rational(n, Rational(1));
        for (long long i = 0; i < n; ++i) {
            if (i == k) continue;
            const auto& xi = nodes[static_cast<std::size_t>(i)];
            basis *= CPoly(std::vector<CycloNum>{-xi, CycloNum::rational(n, Rational(1))});
            denom *= nodes[static_cast<std::size_t>(k)] - xi;
        }
        result += basis * (value / denom);
    }
    return result;
}

}  // namespace dsum
