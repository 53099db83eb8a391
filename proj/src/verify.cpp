#include "dsum/verify.hpp"

#include "dsum/appell.hpp"
#include "dsum/arith.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/errors.hpp"

#include <omp.h>

#include <functional>

namespace dsum {

std::string_view to_string(CaseStatus s) {
    switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string num(long long v) { return std::to_string(v); }

IdentityCase make_case(std::string_view identity, Params params) {
    IdentityCase c;
    c.identity = std::string(identity);
    c.params = std::move(params);
    return c;
}

template <class S>
std::string to_string(const TruncSeries<S>& s) {
    std::string out = "[";
    for (std::size_t m = 0; m < s.coeffs().size(); ++m) {
        if (m) out += "; ";
        out += to_string(s.coeffs()[m]);
    }
    return out + "]";
}

template <class P>
void settle(IdentityCase& c, const P& lhs, const P& rhs) {
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.status = lhs == rhs ? CaseStatus::Pass : CaseStatus::Fail;
    if (c.status == CaseStatus::Fail) c.reason = "lhs and rhs differ";
}

template <class S>
void perturb(Poly<S>& f) {
    f += Poly<S>(S(1));
}

long long sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

// sum_j K_{j-shift} lambda^j B(q + j/n), B a rational polynomial.
CPoly k_weighted_shift_sum(const SpectralSeq& K, long long shift_index, const Rational& lambda, const RPoly& B) {
    const long long n = K.n();
    CPoly sum;
    Rational lam_pow(1);
    for (long long j = 0; j < n; ++j, lam_pow *= lambda) {
        const CycloNum& k = K[j - shift_index];
        if (k.is_zero()) continue;
        const RPoly shifted = shift(B, Rational(j) / Rational(n));
        sum += lift(shifted) * (k * CycloNum(lam_pow));
    }
    return sum;
}

}  // namespace

IdentityCase check_prop1(const PeriodicSeq& C, long long r, const std::string& seq_label, CheckOptions opt) {
    IdentityCase c = make_case("prop1", {{"n", num(C.n())}, {"r", num(r)}, {"seq", seq_label}});
    CPoly lhs = interp_poly(dft_inverse(C), r);
    CPoly rhs = lagrange_oracle(C, r);
    if (opt.perturb_rhs) perturb(rhs);
    settle(c, lhs, rhs);
    return c;
}

std::vector<IdentityCase> check_prop2_range(const std::vector<long long>& ms, long long r, long long p,
                                            const Rational& lambda, const PeriodicSeq& C,
                                            const std::string& seq_label, std::optional<std::size_t> perturb_index) {
    const long long n = C.n();
    std::vector<IdentityCase> cases;
    long long m_max = 1;
    for (long long m : ms) {
        if (m < 1) throw InvalidParam("prop2 needs m >= 1");
        m_max = std::max(m_max, m);
        cases.push_back(make_case("prop2", {{"m", num(m)},
                                            {"n", num(n)},
                                            {"r", num(r)},
                                            {"p", num(p)},
                                            {"lambda", lambda.str()},
                                            {"seq", seq_label}}));
    }

    std::vector<CPoly> E;
    try {
        E = e_sum_sequence(static_cast<std::size_t>(m_max), r, p, CycloNum(lambda), C);
    } catch (const ParameterCollision& e) {
        for (auto& c : cases) {
            c.status = CaseStatus::Skipped;
            c.reason = std::string("ParameterCollision: ") + e.what();
        }
        return cases;
    }
    const SpectralSeq K = dft_inverse(C);
    const Rational lambda_n = pow(lambda, n);
    const auto B = apostol_bernoulli_sequence(static_cast<std::size_t>(m_max), lambda);
    const auto Bn = apostol_bernoulli_sequence(static_cast<std::size_t>(m_max), lambda_n);

    for (std::size_t idx = 0; idx < ms.size(); ++idx) {
        const long long m = ms[idx];
        const auto mu = static_cast<std::size_t>(m);
        CPoly lhs = scale_arg(E[mu - 1], CycloNum(n)) * CycloNum(Rational(sign_pow(p - 1) * m));
        CPoly rhs = lift(scale_arg(B[mu], Rational(n))) * C[0] -
                    k_weighted_shift_sum(K, r + p - 1, lambda, Bn[mu]) * CycloNum(pow(Rational(n), m));
        if (perturb_index && *perturb_index == idx) perturb(rhs);
        settle(cases[idx], lhs, rhs);
    }
    return cases;
}

IdentityCase check_prop2(long long m, long long r, long long p, const Rational& lambda, const PeriodicSeq& C,
                         const std::string& seq_label, CheckOptions opt) {
    return check_prop2_range({m}, r, p, lambda, C, seq_label,
                             opt.perturb_rhs ? std::optional<std::size_t>(0) : std::nullopt)
        .front();
}

IdentityCase check_mult_formula(long long m, long long n, const Rational& lambda, CheckOptions opt) {
    IdentityCase c = make_case("mult", {{"m", num(m)}, {"n", num(n)}, {"lambda", lambda.str()}});
    if (m < 0 || n < 1) throw InvalidParam("mult needs m >= 0 and n >= 1");
    const auto mu = static_cast<std::size_t>(m);
    RPoly lhs = scale_arg(apostol_bernoulli(mu, lambda), Rational(n));
    const RPoly Bn = apostol_bernoulli(mu, pow(lambda, n));
    RPoly sum;
    Rational lam_pow(1);
    for (long long j = 0; j < n; ++j, lam_pow *= lambda)
        sum += shift(Bn, Rational(j) / Rational(n)) * lam_pow;
    RPoly rhs = sum * pow(Rational(n), m - 1);
    if (opt.perturb_rhs) perturb(rhs);
    settle(c, lhs, rhs);
    return c;
}

IdentityCase check_section4_closed_form(long long m, long long n, long long r, long long p, const Rational& lambda,
                                        CheckOptions opt) {
    if (r + p != 1) throw InvalidParam("closed form needs r + p = 1, got r = " + num(r) + ", p = " + num(p));
    if (m < 1) throw InvalidParam("closed form needs m >= 1");
    IdentityCase c = make_case("section4", {{"m", num(m)},
                                            {"n", num(n)},
                                            {"r", num(r)},
                                            {"p", num(p)},
                                            {"lambda", lambda.str()},
                                            {"seq", "ramanujan"}});
    const PeriodicSeq C = family(SequenceDescriptor::parse("ramanujan"), n);
    CPoly E;
    try {
        E = e_sum(ESumParams{m, r, p, CycloNum(lambda), C});
    } catch (const ParameterCollision& e) {
        c.status = CaseStatus::Skipped;
        c.reason = std::string("ParameterCollision: ") + e.what();
        return c;
    }
    CPoly lhs = scale_arg(E, CycloNum(n)) * CycloNum(Rational(sign_pow(p - 1) * m));

    const auto mu = static_cast<std::size_t>(m);
    const Rational lambda_n = pow(lambda, n);
    RPoly rhs = scale_arg(apostol_bernoulli(mu, lambda), Rational(n)) * Rational(arith::euler_phi(n));
    const auto Bn = apostol_bernoulli_sequence(mu, lambda_n);
    const Rational m_fact = factorial(m);
    for (long long i = 0; i <= m; ++i) {
        const Rational Bi = Bn[static_cast<std::size_t>(i)].coeff(0);
        if (Bi.is_zero()) continue;
        for (long long k = 0; k <= m - i; ++k) {
            const Rational coef = pow(Rational(n), m - k) * m_fact / (factorial(i) * factorial(k)) * Bi *
                                  v_sum(n, k, lambda) / factorial(m - i - k);
            rhs -= RPoly::monomial(coef, static_cast<std::size_t>(m - i - k));
        }
    }
    CPoly rhs_c = lift(rhs);
    if (opt.perturb_rhs) perturb(rhs_c);
    settle(c, lhs, rhs_c);
    return c;
}

IdentityCase check_moebius_interp(long long n, CheckOptions opt) {
    if (n < 2) throw InvalidParam("Moebius interpolation check needs n >= 2");
    IdentityCase c = make_case("moebius", {{"n", num(n)}});
    const Rational one(1);
    RPoly totative_sum;
    for (long long j : arith::totatives(n)) totative_sum += RPoly::monomial(one, static_cast<std::size_t>(j));

    const RPoly qn_minus_1 = RPoly::monomial(one, static_cast<std::size_t>(n)) - RPoly(one);
    RPoly with_qd, without_qd;
    for (long long d : arith::divisors(n)) {
        const int mu = arith::moebius(d);
        if (mu == 0) continue;
        const RPoly qd = RPoly::monomial(one, static_cast<std::size_t>(d));
        const RPoly quotient = divexact(qn_minus_1, qd - RPoly(one));
        with_qd += quotient * qd * Rational(mu);
        without_qd += quotient * Rational(mu);
    }
    const CPoly interp = interp_poly(dft_inverse(family(SequenceDescriptor::parse("ramanujan"), n)), 0);

    RPoly rhs = without_qd;
    if (opt.perturb_rhs) perturb(rhs);
    settle(c, totative_sum, rhs);
    if (c.status == CaseStatus::Pass && with_qd != without_qd) {
        c.status = CaseStatus::Fail;
        c.reason = "the two Moebius forms differ";
        c.rhs = to_string(with_qd);
    }
    if (c.status == CaseStatus::Pass && interp != lift(totative_sum)) {
        c.status = CaseStatus::Fail;
        c.reason = "interpolation polynomial of the Ramanujan spectrum differs";
        c.rhs = to_string(interp);
    }
    return c;
}

IdentityCase check_gseries_chain(long long r, long long p, const Rational& lambda, const PeriodicSeq& C,
                                 std::size_t order, const std::string& seq_label, CheckOptions opt) {
    const long long n = C.n();
    IdentityCase c = make_case("gseries", {{"n", num(n)},
                                           {"r", num(r)},
                                           {"p", num(p)},
                                           {"lambda", lambda.str()},
                                           {"seq", seq_label},
                                           {"T", num(static_cast<long long>(order))}});
    if (order < 1) throw InvalidParam("series chain needs T >= 1");
    const CycloNum lam(lambda);
    TruncSeries<CycloNum> G(order);
    std::vector<CPoly> E;
    try {
        G = g_series_oracle(r, p, lam, C, order);
        E = e_sum_sequence(order + 1, r, p, lam, C);
    } catch (const ParameterCollision& e) {
        c.status = CaseStatus::Skipped;
        c.reason = std::string("ParameterCollision: ") + e.what();
        return c;
    }
    const SpectralSeq K = dft_inverse(C);
    const CPoly q = CPoly::q();
    const CycloNum nn(n);

    // Left side of the series identity.
    const auto t_over_l = t_over_exp_minus_one(lam, CycloNum(1), order);
    const auto exp_nq = series_exp_linear(q * nn, order);
    const auto tG_shifted = G.mul_t() * series_exp_linear(q * CycloNum(n - 1), order);
    auto lhs = t_over_l * exp_nq * C[0];
    lhs += sign_pow(p) > 0 ? tG_shifted : -tG_shifted;

    // Right side.
    TruncSeries<CycloNum> weighted(order);
    Rational lam_pow(1);
    for (long long j = 0; j < n; ++j, lam_pow *= lambda) {
        const CycloNum& k = K[j - (r + p - 1)];
        if (k.is_zero()) continue;
        // e^{(q + j/n) n t} = e^{(nq + j) t}
        weighted += series_exp_linear(q * nn + CPoly(CycloNum(j)), order) * (k * CycloNum(lam_pow));
    }
    auto rhs = t_over_exp_minus_one(CycloNum(pow(lambda, n)), nn, order) * weighted * nn;
    if (opt.perturb_rhs) {
        std::vector<CPoly> v = rhs.coeffs();
        perturb(v[0]);
        rhs = TruncSeries<CycloNum>(order, std::move(v));
    }
    settle(c, lhs, rhs);
    if (c.status != CaseStatus::Pass) return c;

    // Coefficient m of t G(q) e^{(n-1)qt} is m E_m(nq); coefficient m of G is E_{m+1}(q).
    for (std::size_t m = 0; m <= order; ++m) {
        const CPoly expect = m == 0 ? CPoly() : scale_arg(E[m - 1], nn) * CycloNum(static_cast<long long>(m));
        if (tG_shifted[m] != expect) {
            c.status = CaseStatus::Fail;
            c.reason = "coefficient " + num(static_cast<long long>(m)) + " of t G e^{(n-1)qt} differs from m E_m(nq)";
            c.lhs = to_string(tG_shifted[m]);
            c.rhs = to_string(expect);
            return c;
        }
        if (G[m] != E[m]) {
            c.status = CaseStatus::Fail;
            c.reason = "coefficient " + num(static_cast<long long>(m)) + " of G differs from E_{m+1}";
            c.lhs = to_string(G[m]);
            c.rhs = to_string(E[m]);
            return c;
        }
    }
    return c;
}

std::string_view to_string(Identity id) {
    switch (id) {
    case Identity::Prop1: return "prop1";
    case Identity::Prop2: return "prop2";
    case Identity::Mult: return "mult";
    case Identity::Section4: return "section4";
    case Identity::Moebius: return "moebius";
    case Identity::GSeries: return "gseries";
    }
    return "?";
}

Identity parse_identity(std::string_view name) {
    for (Identity id : all_identities())
        if (to_string(id) == name) return id;
    throw InvalidGrid("unknown identity '" + std::string(name) + "'");
}

const std::vector<Identity>& all_identities() {
    static const std::vector<Identity> ids{Identity::Prop1,    Identity::Prop2,   Identity::Mult,
                                           Identity::Section4, Identity::Moebius, Identity::GSeries};
    return ids;
}

namespace {

std::vector<long long> range(long long lo, long long hi) {
    std::vector<long long> v;
    for (long long i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
    std::vector<Rational> v;
    for (const char* t : texts) v.push_back(Rational::parse(t));
    return v;
}

void require(bool ok, const GridSpec& spec, std::string_view what) {
    if (!ok)
        throw InvalidGrid("grid for '" + std::string(to_string(spec.identity)) + "' has an empty or invalid '" +
                          std::string(what) + "' range");
}

}  // namespace

void validate(const GridSpec& spec) {
    const auto all_at_least = [](const std::vector<long long>& v, long long lo) {
        for (long long x : v)
            if (x < lo) return false;
        return true;
    };
    const Identity id = spec.identity;
    const bool uses_m = id == Identity::Prop2 || id == Identity::Mult || id == Identity::Section4;
    const bool uses_rp = id == Identity::Prop2 || id == Identity::Section4 || id == Identity::GSeries;
    const bool uses_lambda = id != Identity::Prop1 && id != Identity::Moebius;
    const bool uses_seq = id == Identity::Prop1 || id == Identity::Prop2 || id == Identity::GSeries;

    require(!spec.n.empty() && all_at_least(spec.n, 2), spec, "n");
    if (uses_m) require(!spec.m.empty() && all_at_least(spec.m, 1), spec, "m");
    if (id == Identity::Prop1) require(!spec.r.empty(), spec, "r");
    if (uses_rp) {
        require(!spec.r.empty(), spec, "r");
        require(!spec.p.empty(), spec, "p");
    }
    if (uses_lambda) require(!spec.lambdas.empty(), spec, "lambda");
    if (id == Identity::GSeries) require(spec.order >= 1, spec, "T");
    if (id == Identity::Section4) {
        bool any = false;
        for (long long r : spec.r)
            for (long long p : spec.p) any = any || r + p == 1;
        require(any, spec, "r/p (no pair with r + p = 1)");
    }
    if (uses_seq) {
        require(!spec.sequences.empty(), spec, "sequences");
        for (const auto& text : spec.sequences) {
            SequenceDescriptor d;
            try {
                d = SequenceDescriptor::parse(text);
            } catch (const ParseError& e) {
                throw InvalidGrid(e.what());
            }
            if (d.needs_explicit_c0() && !d.c0 && id != Identity::Prop1)
                throw InvalidGrid("sequence '" + text + "' needs an explicit c0=<value> for this identity");
            if (d.needs_explicit_c0())
                for (long long n : spec.n)
                    if (arith::gcd(d.a, n) != 1)
                        throw InvalidGrid("sequence '" + text + "' is undefined at n = " + std::to_string(n) +
                                          " (gcd(a, n) != 1)");
        }
    }
}

GridSpec default_grid(Identity id, std::uint64_t seed) {
    GridSpec g;
    g.identity = id;
    g.seed = seed;
    g.campaign = "acceptance-" + std::string(to_string(id));
    switch (id) {
    case Identity::Prop1:
        g.n = range(2, 8);
        g.r = range(-2, 5);
        for (int i = 0; i < 50; ++i) g.sequences.push_back("random:" + std::to_string(i));
        break;
    case Identity::Prop2:
        g.m = range(1, 6);
        g.n = range(2, 8);
        g.r = range(0, 3);
        g.p = {-1, 0, 1, 2};
        g.lambdas = rationals({"1", "2", "-1/2", "3", "5/7"});
        g.sequences = {"delta", "ramanujan", "random:0", "random:1", "random:2"};
        break;
    case Identity::Mult:
        g.m = range(1, 6);
        g.n = range(2, 8);
        g.lambdas = rationals({"1", "2", "-1/2"});
        break;
    case Identity::Section4:
        g.m = range(1, 5);
        g.n = {2, 3, 4, 6};
        g.r = {-1, 0, 1};
        g.p = {0, 1, 2};
        g.lambdas = rationals({"2", "-1/2"});
        break;
    case Identity::Moebius:
        g.n = range(2, 12);
        break;
    case Identity::GSeries:
        g.n = {2, 3, 4, 6};
        g.r = range(0, 2);
        g.p = {-1, 0, 1, 2};
        g.lambdas = rationals({"1", "2", "-1/2"});
        g.sequences = {"delta", "random:0", "random:1", "random:2"};
        g.order = 8;
        break;
    }
    return g;
}

namespace {

// A unit of grid work: evaluates a fixed number of consecutive cases.
struct WorkUnit {
    std::size_t count = 1;
    std::function<std::vector<IdentityCase>(std::optional<std::size_t>)> run;
    // Used when run throws something other than a collision.
    std::function<std::vector<IdentityCase>()> placeholders;
};

CheckOptions opts(std::optional<std::size_t> local) { return CheckOptions{local.has_value()}; }

std::vector<WorkUnit> plan(const GridSpec& g) {
    std::vector<WorkUnit> units;
    const auto single = [&](std::function<IdentityCase(CheckOptions)> f, Params params) {
        WorkUnit u;
        u.run = [f](std::optional<std::size_t> local) { return std::vector<IdentityCase>{f(opts(local))}; };
        u.placeholders = [id = std::string(to_string(g.identity)), params] {
            return std::vector<IdentityCase>{make_case(id, params)};
        };
        units.push_back(std::move(u));
    };
    const auto seq = [&g](const std::string& desc, long long n) { return family(SequenceDescriptor::parse(desc), n, g.seed); };

    switch (g.identity) {
    case Identity::Prop1:
        for (long long n : g.n)
            for (long long r : g.r)
                for (const auto& s : g.sequences)
                    single([=](CheckOptions o) { return check_prop1(seq(s, n), r, s, o); },
                           {{"n", num(n)}, {"r", num(r)}, {"seq", s}});
        break;
    case Identity::Prop2:
        for (long long n : g.n)
            for (long long r : g.r)
                for (long long p : g.p)
                    for (const auto& lambda : g.lambdas)
                        for (const auto& s : g.sequences) {
                            WorkUnit u;
                            u.count = g.m.size();
                            const auto ms = g.m;
                            u.run = [=](std::optional<std::size_t> local) {
                                return check_prop2_range(ms, r, p, lambda, seq(s, n), s, local);
                            };
                            u.placeholders = [=] {
                                std::vector<IdentityCase> v;
                                for (long long m : ms)
                                    v.push_back(make_case("prop2", {{"m", num(m)},
                                                                    {"n", num(n)},
                                                                    {"r", num(r)},
                                                                    {"p", num(p)},
                                                                    {"lambda", lambda.str()},
                                                                    {"seq", s}}));
                                return v;
                            };
                            units.push_back(std::move(u));
                        }
        break;
    case Identity::Mult:
        for (long long m : g.m)
            for (long long n : g.n)
                for (const auto& lambda : g.lambdas)
                    single([=](CheckOptions o) { return check_mult_formula(m, n, lambda, o); },
                           {{"m", num(m)}, {"n", num(n)}, {"lambda", lambda.str()}});
        break;
    case Identity::Section4:
        for (long long m : g.m)
            for (long long n : g.n)
                for (long long r : g.r)
                    for (long long p : g.p) {
                        if (r + p != 1) continue;
                        for (const auto& lambda : g.lambdas)
                            single([=](CheckOptions o) { return check_section4_closed_form(m, n, r, p, lambda, o); },
                                   {{"m", num(m)},
                                    {"n", num(n)},
                                    {"r", num(r)},
                                    {"p", num(p)},
                                    {"lambda", lambda.str()},
                                    {"seq", "ramanujan"}});
                    }
        break;
    case Identity::Moebius:
        for (long long n : g.n) single([=](CheckOptions o) { return check_moebius_interp(n, o); }, {{"n", num(n)}});
        break;
    case Identity::GSeries:
        for (long long n : g.n)
            for (long long r : g.r)
                for (long long p : g.p)
                    for (const auto& lambda : g.lambdas)
                        for (const auto& s : g.sequences) {
                            const std::size_t T = g.order;
                            single([=](CheckOptions o) { return check_gseries_chain(r, p, lambda, seq(s, n), T, s, o); },
                                   {{"n", num(n)},
                                    {"r", num(r)},
                                    {"p", num(p)},
                                    {"lambda", lambda.str()},
                                    {"seq", s},
                                    {"T", num(static_cast<long long>(T))}});
                        }
        break;
    }
    return units;
}

std::vector<IdentityCase> run_unit(const WorkUnit& u, std::optional<std::size_t> local) {
    try {
        return u.run(local);
    } catch (const std::exception& e) {
        auto cases = u.placeholders();
        for (auto& c : cases) {
            c.status = CaseStatus::Fail;
            c.reason = std::string("error: ") + e.what();
        }
        return cases;
    }
}

}  // namespace

std::vector<IdentityCase> run_grid(const GridSpec& spec, const RunOptions& opt) {
    validate(spec);
    const std::vector<WorkUnit> units = plan(spec);

    std::vector<std::size_t> offset(units.size() + 1, 0);
    for (std::size_t i = 0; i < units.size(); ++i) offset[i + 1] = offset[i] + units[i].count;
    const auto local_perturb = [&](std::size_t i) -> std::optional<std::size_t> {
        if (!opt.perturb_case) return std::nullopt;
        const std::size_t c = *opt.perturb_case;
        if (c >= offset[i] && c < offset[i + 1]) return c - offset[i];
        return std::nullopt;
    };

    std::vector<std::vector<IdentityCase>> results(units.size());
    const auto count = static_cast<long long>(units.size());
    if (opt.workers == 1) {
        for (long long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = run_unit(units[static_cast<std::size_t>(i)], local_perturb(static_cast<std::size_t>(i)));
    } else {
        const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < count; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            results[idx] = run_unit(units[idx], local_perturb(idx));
        }
    }

    std::vector<IdentityCase> out;
    out.reserve(offset.back());
    for (auto& r : results)
        for (auto& c : r) out.push_back(std::move(c));
    return out;
}

Summary summarize(const std::vector<IdentityCase>& cases) {
    Summary s;
    for (const auto& c : cases) {
        switch (c.status) {
        case CaseStatus::Pass: ++s.pass; break;
        case CaseStatus::Fail: ++s.fail; break;
        case CaseStatus::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

}  // namespace dsum
