#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/rational.hpp"
#include "dsum/spectra.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsum {

enum class CaseStatus { Pass, Fail, Skipped };

std::string_view to_string(CaseStatus s);

/// Outcome of one identity check at one parameter tuple. A pass means the
/// canonical forms of both sides are identical.
struct IdentityCase {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;  // in report order
    CaseStatus status = CaseStatus::Pass;
    std::string reason;
    std::string lhs;
    std::string rhs;
};

/// Test-only mutation hook: when set, the checker adds 1 to the constant
/// coefficient of its right-hand side before comparing.
struct CheckOptions {
    bool perturb_rhs = false;
};

/// interp_poly(dft_inverse(C), r) == lagrange_oracle(C, r).
IdentityCase check_prop1(const PeriodicSeq& C, long long r, const std::string& seq_label, CheckOptions opt = {});

/// (-1)^{p-1} m E_{m,n}^{r,p}(nq, lambda; C)
///     == C_0 B_m(nq, lambda) - n^m sum_j K_{j-r-p+1} lambda^j B_m(q + j/n, lambda^n),
/// with K = dft_inverse(C). Collisions are reported as skipped.
IdentityCase check_prop2(long long m, long long r, long long p, const Rational& lambda, const PeriodicSeq& C,
                         const std::string& seq_label, CheckOptions opt = {});

/// check_prop2 for several m at once, sharing the recurrences. Output order follows ms.
std::vector<IdentityCase> check_prop2_range(const std::vector<long long>& ms, long long r, long long p,
                                            const Rational& lambda, const PeriodicSeq& C,
                                            const std::string& seq_label,
                                            std::optional<std::size_t> perturb_index = std::nullopt);

/// B_m(nq, lambda) == n^{m-1} sum_j lambda^j B_m(q + j/n, lambda^n).
IdentityCase check_mult_formula(long long m, long long n, const Rational& lambda, CheckOptions opt = {});

/// The Ramanujan-weight closed form with r + p = 1, assembled from the
/// Apostol-Bernoulli numbers B_i(lambda^n) and the power sums V_n^{(k)}(lambda).
/// Throws InvalidParam when r + p != 1.
IdentityCase check_section4_closed_form(long long m, long long n, long long r, long long p, const Rational& lambda,
                                        CheckOptions opt = {});

/// sum over totatives q^j against (q^n-1) sum_{d|n} mu(d) q^d/(q^d-1) and
/// (q^n-1) sum_{d|n} mu(d)/(q^d-1), plus the interpolation polynomial of the
/// Ramanujan spectrum at r = 0.
IdentityCase check_moebius_interp(long long n, CheckOptions opt = {});

/// Series identity modulo t^{T+1}:
///     C_0 t e^{nqt}/(lambda e^t - 1) + (-1)^p t G(q) e^{(n-1)qt}
///         == n t sum_j K_{j-r-p+1} lambda^j e^{(q+j/n)nt} / (lambda^n e^{nt} - 1),
/// together with coefficient m of t G(q) e^{(n-1)qt} == m E_m(nq) and
/// coefficient m of G == E_{m+1}.
IdentityCase check_gseries_chain(long long r, long long p, const Rational& lambda, const PeriodicSeq& C,
                                 std::size_t order, const std::string& seq_label, CheckOptions opt = {});

enum class Identity { Prop1, Prop2, Mult, Section4, Moebius, GSeries };

std::string_view to_string(Identity id);
/// "prop1", "prop2", "mult", "section4", "moebius", "gseries".
Identity parse_identity(std::string_view name);
const std::vector<Identity>& all_identities();

/// A cartesian verification campaign for one identity. Which ranges are
/// read depends on the identity; those that are read must be nonempty.
struct GridSpec {
    std::string campaign;
    Identity identity = Identity::Prop2;
    std::vector<long long> m, n, r, p;
    std::vector<Rational> lambdas;
    std::vector<std::string> sequences;
    std::size_t order = 8;
    std::uint64_t seed = 0;
};

/// Throws InvalidGrid naming the first empty or malformed range.
void validate(const GridSpec& spec);

/// The acceptance campaign for an identity.
GridSpec default_grid(Identity id, std::uint64_t seed = 0);

struct RunOptions {
    /// 0 uses every available thread; 1 runs the serial reference loop.
    int workers = 0;
    /// Case index (in report order) whose right-hand side gets perturbed.
    std::optional<std::size_t> perturb_case;
};

/// Evaluates every case of the grid. Output order is fixed by the parameter
/// tuple, independent of the worker count.
std::vector<IdentityCase> run_grid(const GridSpec& spec, const RunOptions& opt = {});

struct Summary {
    std::size_t pass = 0, fail = 0, skipped = 0;
};
Summary summarize(const std::vector<IdentityCase>& cases);

}  // namespace dsum
