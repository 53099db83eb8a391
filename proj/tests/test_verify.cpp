#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/errors.hpp"
#include "dsum/io.hpp"
#include "dsum/verify.hpp"

using namespace dsum;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

GridSpec small_prop2() {
    GridSpec g = default_grid(Identity::Prop2, 3);
    g.m = {1, 2, 3};
    g.n = {2, 3, 4};
    g.r = {0, 1};
    g.p = {-1, 1};
    g.lambdas = {R("2"), R("-1"), R("1")};
    g.sequences = {"delta", "random:0", "apostol-dedekind:a=1,c0=1/3"};
    return g;
}

}  // namespace

TEST_CASE("check_prop1") {
    for (long long r = -2; r <= 3; ++r) {
        const PeriodicSeq C(4, std::vector<CycloNum>(4, CycloNum(R("2/3"))));
        CHECK(check_prop1(C, r, "const").status == CaseStatus::Pass);
    }
    const IdentityCase c = check_prop1(family("ramanujan", 6), 0, "ramanujan");
    CHECK(c.status == CaseStatus::Pass);
    CHECK(c.lhs == "q^5 + q");
    const IdentityCase bad = check_prop1(family("ramanujan", 6), 0, "ramanujan", {true});
    CHECK(bad.status == CaseStatus::Fail);
    CHECK(bad.rhs == "q^5 + q + 1");
}

TEST_CASE("check_prop2") {
    for (long long m = 1; m <= 4; ++m) {
        CHECK(check_prop2(m, 0, 1, R("2"), family("delta", 3), "delta").status == CaseStatus::Pass);
        CHECK(check_prop2(m, 0, 1, R("3"), family("ramanujan", 5), "ramanujan").status == CaseStatus::Pass);
        CHECK(check_prop2(m, 2, -1, R("5/7"), family("random:1", 4, 9), "random:1").status == CaseStatus::Pass);
        CHECK(check_prop2(m, 1, 2, R("-1/2"), family("fourier-dedekind:a=2,c0=5", 5), "fd").status == CaseStatus::Pass);
    }
    const IdentityCase skip = check_prop2(2, 0, 1, R("-1"), family("delta", 4), "delta");
    CHECK(skip.status == CaseStatus::Skipped);
    CHECK(skip.reason.find("ParameterCollision") != std::string::npos);
    CHECK(check_prop2(2, 0, 1, R("-1"), family("delta", 5), "delta").status == CaseStatus::Pass);
    CHECK(check_prop2(3, 1, 0, R("2"), family("random:0", 3), "r", {true}).status == CaseStatus::Fail);
}

TEST_CASE("check_mult_formula") {
    const IdentityCase c = check_mult_formula(1, 2, R("2"));
    CHECK(c.status == CaseStatus::Pass);
    CHECK(c.lhs == "1");
    CHECK(c.rhs == "1");
    CHECK(check_mult_formula(2, 2, R("1")).status == CaseStatus::Pass);
    for (long long m = 1; m <= 6; ++m)
        for (long long n = 1; n <= 8; ++n)
            for (const char* l : {"1", "2", "-1/2"}) CHECK(check_mult_formula(m, n, R(l)).status == CaseStatus::Pass);
    CHECK(check_mult_formula(3, 3, R("2"), {true}).status == CaseStatus::Fail);
}

TEST_CASE("check_section4_closed_form") {
    for (long long n : {2, 3, 4, 6})
        for (auto [r, p] : {std::pair{1LL, 0LL}, {0LL, 1LL}, {-1LL, 2LL}}) {
            CHECK(check_section4_closed_form(1, n, r, p, R("2")).status == CaseStatus::Pass);
            // the same case through the general identity
            CHECK(check_prop2(1, r, p, R("2"), family("ramanujan", n), "ramanujan").status == CaseStatus::Pass);
        }
    CHECK_THROWS_AS(check_section4_closed_form(2, 4, 1, 1, R("2")), InvalidParam);
    CHECK(check_section4_closed_form(2, 4, 0, 1, R("-1")).status == CaseStatus::Skipped);
    CHECK(check_section4_closed_form(2, 4, 0, 1, R("2"), {true}).status == CaseStatus::Fail);
}

TEST_CASE("check_moebius_interp") {
    const IdentityCase six = check_moebius_interp(6);
    CHECK(six.status == CaseStatus::Pass);
    CHECK(six.lhs == "q^5 + q");
    CHECK(check_moebius_interp(4).lhs == "q^3 + q");
    for (long long p : {2, 3, 5, 7, 11}) CHECK(check_moebius_interp(p).status == CaseStatus::Pass);
    CHECK(check_moebius_interp(12, {true}).status == CaseStatus::Fail);
    CHECK_THROWS_AS(check_moebius_interp(1), InvalidParam);
}

TEST_CASE("check_gseries_chain") {
    CHECK(check_gseries_chain(0, 1, R("2"), family("delta", 3), 6, "delta").status == CaseStatus::Pass);
    CHECK(check_gseries_chain(1, -1, R("2"), family("random:0", 3), 8, "random:0").status == CaseStatus::Pass);
    CHECK(check_gseries_chain(2, 2, R("1"), family("random:1", 4), 5, "random:1").status == CaseStatus::Pass);
    CHECK(check_gseries_chain(0, 1, R("-1"), family("delta", 4), 4, "delta").status == CaseStatus::Skipped);
    // lambda^n = 1 with lambda != 1 goes through the divided-by-t branch
    CHECK(check_gseries_chain(0, 1, R("-1"), family("random:2", 3), 4, "random:2").status == CaseStatus::Pass);
    CHECK(check_gseries_chain(0, 1, R("2"), family("delta", 3), 4, "delta", {true}).status == CaseStatus::Fail);
}

TEST_CASE("grid validation") {
    GridSpec g = default_grid(Identity::Mult);
    g.lambdas.clear();
    CHECK_THROWS_AS(run_grid(g), InvalidGrid);
    GridSpec s4 = default_grid(Identity::Section4);
    s4.r = {5};
    CHECK_THROWS_AS(validate(s4), InvalidGrid);
    GridSpec p2 = small_prop2();
    p2.sequences = {"fourier-dedekind:a=1"};
    CHECK_THROWS_AS(validate(p2), InvalidGrid);
    p2.sequences = {"fourier-dedekind:a=2,c0=0"};
    CHECK_THROWS_AS(validate(p2), InvalidGrid);  // gcd(2, 2) and gcd(2, 4)
    p2.sequences = {"nonsense"};
    CHECK_THROWS_AS(validate(p2), InvalidGrid);
    GridSpec p1 = default_grid(Identity::Prop1);
    p1.n = {1};
    CHECK_THROWS_AS(validate(p1), InvalidGrid);
    for (Identity id : all_identities()) CHECK_NOTHROW(validate(default_grid(id)));
}

TEST_CASE("run_grid skips collisions, order is independent of workers") {
    const GridSpec g = small_prop2();
    const auto serial = run_grid(g, {1, std::nullopt});
    const auto parallel = run_grid(g, {0, std::nullopt});
    const auto four = run_grid(g, {4, std::nullopt});
    CHECK(serial.size() == 3u * 3u * 2u * 2u * 3u * 3u);
    const Summary s = summarize(serial);
    CHECK(s.fail == 0);
    // lambda = -1 collides for n = 2 and n = 4
    CHECK(s.skipped == 3u * 2u * 2u * 2u * 3u);
    CHECK(io::report_json("x", serial) == io::report_json("x", parallel));
    CHECK(io::report_json("x", serial) == io::report_json("x", four));
    // m is the innermost parameter
    CHECK(serial[0].params[0].second == "1");
    CHECK(serial[1].params[0].second == "2");
}

TEST_CASE("mutation hook fails exactly one case") {
    GridSpec g = default_grid(Identity::Mult);
    g.n = {2, 3, 5};
    const auto clean = run_grid(g);
    REQUIRE(summarize(clean).fail == 0);
    for (std::size_t target : {std::size_t{0}, std::size_t{7}, clean.size() - 1}) {
        const auto cases = run_grid(g, {0, target});
        CHECK(summarize(cases).fail == 1);
        CHECK(cases[target].status == CaseStatus::Fail);
    }
    GridSpec p = small_prop2();
    const auto base = run_grid(p);
    // pick an evaluated (non-skipped) case inside a multi-case unit
    std::size_t target = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i].status == CaseStatus::Pass && base[i].params[0].second == "2") target = i;
    const auto cases = run_grid(p, {2, target});
    CHECK(summarize(cases).fail == 1);
    CHECK(cases[target].status == CaseStatus::Fail);
}

TEST_CASE("identity names") {
    for (Identity id : all_identities()) CHECK(parse_identity(to_string(id)) == id);
    CHECK_THROWS_AS(parse_identity("prop3"), InvalidGrid);
}
