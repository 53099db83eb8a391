#pragma once

#include "dsum/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsum {

namespace detail {

/// n-periodic sequence with values in Q(zeta_n). Indexing wraps modulo n,
/// so negative indices are legal.
template <class Tag>
class Periodic {
public:
    Periodic(long long n, std::vector<CycloNum> values);

    long long n() const noexcept { return n_; }
    const std::vector<CycloNum>& values() const noexcept { return v_; }
    const CycloNum& operator[](long long k) const;

    friend bool operator==(const Periodic& a, const Periodic& b) { return a.n_ == b.n_ && a.v_ == b.v_; }

private:
    long long n_;
    std::vector<CycloNum> v_;
};

struct PeriodicTag;
struct SpectralTag;

}  // namespace detail

/// The sequence C = {C_k}.
using PeriodicSeq = detail::Periodic<detail::PeriodicTag>;
/// Its spectrum K = {K_j}, with C_k = sum_j K_j zeta_n^{kj}.
using SpectralSeq = detail::Periodic<detail::SpectralTag>;

extern template class detail::Periodic<detail::PeriodicTag>;
extern template class detail::Periodic<detail::SpectralTag>;

/// C_k = sum_j K_j zeta_n^{kj}. Output entries are computed in parallel.
PeriodicSeq dft_forward(const SpectralSeq& K);
/// K_j = (1/n) sum_k C_k zeta_n^{-kj}. Output entries are computed in parallel.
SpectralSeq dft_inverse(const PeriodicSeq& C);

namespace serial {
PeriodicSeq dft_forward(const SpectralSeq& K);
SpectralSeq dft_inverse(const PeriodicSeq& C);
}  // namespace serial

/// Named weight families and random test sequences.
///
/// Text forms: "delta", "ramanujan", "fourier-dedekind:a=3",
/// "apostol-dedekind:a=3,c0=1/2", "random:2" (the second random sequence of
/// a campaign).
struct SequenceDescriptor {
    enum class Kind { Delta, Ramanujan, FourierDedekind, ApostolDedekind, Random };
    Kind kind = Kind::Delta;
    long long a = 1;
    std::optional<Rational> c0;  // only for the two Dedekind families
    long long index = 0;         // only for Random

    static SequenceDescriptor parse(std::string_view text);
    std::string str() const;
    /// True for families whose C_0 is not defined by the weights themselves.
    bool needs_explicit_c0() const;
};

/// Builds the named sequence at level n. Throws InvalidParam when
/// gcd(a, n) != 1 for the Dedekind families. The seed only affects Random.
PeriodicSeq family(const SequenceDescriptor& desc, long long n, std::uint64_t seed = 0);
PeriodicSeq family(std::string_view desc, long long n, std::uint64_t seed = 0);

/// n rational values drawn from a fixed generator keyed on (seed, n).
PeriodicSeq random_rational_sequence(long long n, std::uint64_t seed);

/// C^{(r)}(q) = sum_j K_{j-r} q^j.
CPoly interp_poly(const SpectralSeq& K, long long r);

/// The polynomial of degree < n taking the value zeta_n^{-kr} C_{-k} at
/// zeta_n^{-k}, built by explicit Lagrange interpolation.
CPoly lagrange_oracle(const PeriodicSeq& C, long long r);

}  // namespace dsum
