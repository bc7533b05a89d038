#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcov/certify.hpp"
#include "modcov/cli.hpp"

#include <cstdlib>

using namespace modcov;

namespace {

Polynomial P(const CaseData& data, std::string_view text)
{
    return parse(text, data.action.num_vars(), data.action.prime());
}

bool verdict_consistent(const Certificate& c)
{
    bool all = !c.per_degree.empty();
    for (const auto& r : c.per_degree)
        all = all && r.ok;
    return c.verdict.verified == (all && c.freetest.matches());
}

} // namespace

TEST_CASE("V2 certificates")
{
    const CaseData d = build_case({CaseKind::v2, 2, 2});
    const Certificate ok = nakayama_certify(d, {P(d, "1"), P(d, "x1")});
    CHECK(ok.verdict.verified);
    CHECK(verdict_consistent(ok));

    const Certificate dropped = nakayama_certify(d, {P(d, "1")});
    CHECK_FALSE(dropped.verdict.verified);
    REQUIRE(dropped.per_degree.size() == 2);
    CHECK(dropped.per_degree[0].ok);
    CHECK_FALSE(dropped.per_degree[1].ok);
    CHECK(dropped.per_degree[1].candidates_at_d == 0);
    CHECK(dropped.per_degree[1].dim_Md - dropped.per_degree[1].dim_AplusMd == 1);
    CHECK(dropped.verdict.reason.find("degree 1") != std::string::npos);
    CHECK(verdict_consistent(dropped));
}

TEST_CASE("a candidate outside the kernel fails immediately")
{
    const CaseData d = build_case({CaseKind::v3odd, 3, 2});
    REQUIRE(d.candidates[3] == delta(d.action, P(d, "x1^2")));
    std::vector<Polynomial> cands = d.candidates;
    cands[3] = P(d, "x1*x2");
    CHECK_FALSE(delta_pow(d.action, 2, cands[3]).is_zero());
    const Certificate c = nakayama_certify(d, cands);
    CHECK_FALSE(c.verdict.verified);
    CHECK(c.verdict.reason.find("x1*x2") != std::string::npos);
    CHECK(c.verdict.reason.find("not in K_2") != std::string::npos);
    CHECK(c.per_degree.back().d == 2);
}

TEST_CASE("malformed candidates are rejected")
{
    const CaseData d = build_case({CaseKind::v3odd, 3, 2});
    CHECK_FALSE(nakayama_certify(d, {P(d, "1"), P(d, "x2 + 1")}).verdict.verified);
    CHECK_FALSE(nakayama_certify(d, {P(d, "1"), P(d, "0")}).verdict.verified);
    CHECK_FALSE(nakayama_certify(d, {Polynomial::constant(2, Prime(3), 1)}).verdict.verified);
}

TEST_CASE("freetest records")
{
    {
        const CaseData d = build_case({CaseKind::v3odd, 5, 3});
        const FreetestRecord f = freetest_check(d, d.candidates);
        CHECK(f.count == 6);
        CHECK(f.degree_sum == 15);
        CHECK(f.expected_r == 6);
        CHECK(f.expected_s == 15);
        CHECK(f.matches());
    }
    {
        const CaseData d = build_case({CaseKind::v2v2, 5, 3});
        const FreetestRecord f = freetest_check(d, d.candidates);
        CHECK(f.count == 15);
        CHECK(f.degree_sum == 60);
        CHECK(f.matches());
    }
    for (const auto& spec : acceptance_instances(5)) {
        if (spec.n != 1)
            continue;
        const CaseData d = build_case(spec);
        const FreetestRecord f = freetest_check(d, d.candidates);
        CHECK(f.count == std::int64_t(d.secondary.size()));
        CHECK(f.degree_sum == d.expected_invariants.s);
        CHECK(f.matches());
    }
}

TEST_CASE("s-invariants scale with n")
{
    for (const auto& spec : acceptance_instances(7)) {
        if (spec.kind != CaseKind::v3odd && spec.kind != CaseKind::v2v2)
            continue;
        Certifier c(build_case(spec));
        const RankS mod = rank_s(c.kernel_numerator(spec.n));
        const RankS inv = rank_s(c.kernel_numerator(1));
        CHECK(mod.s == inv.s * spec.n);
        CHECK(mod.r == inv.r * spec.n);
    }
}

TEST_CASE("secondary certificates")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const Certificate c = secondary_certify(build_case({CaseKind::v3odd, p, 1}));
        CHECK(c.verdict.verified);
        CHECK(c.freetest.degree_sum == p);
    }
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Certificate c = secondary_certify(build_case({CaseKind::v2v2, p, 1}));
        CHECK(c.verdict.verified);
        CHECK(c.freetest.degree_sum == std::int64_t(p) * (p - 1));
    }
    const CaseData c4 = build_case({CaseKind::v3c4, 2, 1});
    const Certificate c = secondary_certify(c4);
    CHECK(c.verdict.verified);
    CHECK(c.freetest.degree_sum == 3);
    SliceEngine engine(c4.action);
    REQUIRE(engine.kernel(1, 2)->rank() == 2);
    const SubspaceSlice expect =
        SubspaceSlice::span(2, engine.basis(2)->dim(), 2,
                            {engine.basis(2)->coords(P(c4, "x2^2 + x2*x3")), engine.basis(2)->coords(P(c4, "x3^2"))});
    CHECK(*engine.kernel(1, 2) == expect);
}

TEST_CASE("verified certificates generate the whole kernel")
{
    for (const auto& spec : acceptance_instances(5)) {
        Certifier c(build_case(spec));
        const Certificate cert = c.certify(spec.n, c.data().candidates);
        INFO(describe(spec) << ": " << cert.verdict.reason);
        CHECK(cert.verdict.verified);
        CHECK(verdict_consistent(cert));
        CHECK_FALSE(soundness_mismatch(c, spec.n, c.data().candidates).has_value());
    }
    Certifier c(build_case({CaseKind::v3odd, 5, 3}));
    const auto partial = drop_candidate(c.data().candidates, 4);
    CHECK(soundness_mismatch(c, 3, partial).has_value());
}

TEST_CASE("mutations are rejected")
{
    for (const CaseSpec& spec : {CaseSpec{CaseKind::v3odd, 5, 3}, CaseSpec{CaseKind::v2v2, 3, 2},
                                 CaseSpec{CaseKind::v3c4, 2, 4}, CaseSpec{CaseKind::v2, 3, 3}}) {
        Certifier c(build_case(spec));
        const auto& cands = c.data().candidates;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const Certificate dropped = c.certify(spec.n, drop_candidate(cands, i));
            CHECK_FALSE(dropped.verdict.verified);
            CHECK(verdict_consistent(dropped));
            for (std::size_t h = 0; h < c.data().hsop.size(); ++h)
                CHECK_FALSE(c.certify(spec.n, scale_candidate(c.data(), cands, i, h)).verdict.verified);
        }
    }
    const CaseData d = build_case({CaseKind::v2, 3, 2});
    CHECK_THROWS_AS(drop_candidate(d.candidates, 2), std::out_of_range);
    CHECK_THROWS_AS(scale_candidate(d, d.candidates, 0, 2), std::out_of_range);
}

TEST_CASE("degree cap")
{
    const CaseData d = build_case({CaseKind::v3odd, 5, 3});
    const Certificate c = nakayama_certify(d, d.candidates, CertifyOptions{3});
    CHECK_FALSE(c.verdict.verified);
    CHECK_FALSE(c.freetest.error.empty());
    CHECK(nakayama_certify(d, d.candidates, CertifyOptions{40}).verdict.verified);

    ::setenv("MODCOV_MAX_DEGREE", "12", 1);
    CHECK(degree_cap_from_env() == 12u);
    ::setenv("MODCOV_MAX_DEGREE", "twelve", 1);
    CHECK_THROWS_AS(degree_cap_from_env(), std::invalid_argument);
    ::unsetenv("MODCOV_MAX_DEGREE");
    CHECK_FALSE(degree_cap_from_env().has_value());
}
