#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcov/cases.hpp"
#include "modcov/properties.hpp"

using namespace modcov;

namespace {

Polynomial P(const CyclicAction& a, std::string_view text)
{
    return parse(text, a.num_vars(), a.prime());
}

} // namespace

TEST_CASE("act examples")
{
    const CyclicAction v3 = make_action(CaseKind::v3odd, 3);
    CHECK(act(v3, 1, P(v3, "x1")) == P(v3, "x1 + x2"));
    const Polynomial f = P(v3, "x1^2*x2 + 2*x3");
    CHECK(act(v3, 0, f) == f);
    CHECK(act(v3, 3, f) == f);
    CHECK(act(v3, -1, act(v3, 1, f)) == f);
    const CyclicAction c4 = make_action(CaseKind::v3c4, 2);
    CHECK(act(c4, 2, P(c4, "x1")) == P(c4, "x1 + x3"));
    CHECK(act(c4, 4, P(c4, "x1")) == P(c4, "x1"));
    CHECK_THROWS_AS(act(v3, 1, Polynomial::var(2, Prime(3), 1)), std::invalid_argument);
}

TEST_CASE("act is a degree preserving ring homomorphism")
{
    for (const auto& c : property_cases(5)) {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 100; ++i) {
            const Polynomial f = random_polynomial(rng, c.action.num_vars(), c.action.prime(), 3, 3);
            const Polynomial g = random_polynomial(rng, c.action.num_vars(), c.action.prime(), 3, 3);
            CHECK(act(c.action, 1, f * g) == act(c.action, 1, f) * act(c.action, 1, g));
            CHECK(act(c.action, 2, f + g) == act(c.action, 2, f) + act(c.action, 2, g));
            CHECK(act(c.action, 1, f).total_degree() == f.total_degree());
        }
    }
}

TEST_CASE("action validation")
{
    const Prime three(3);
    auto x = [&](std::size_t i) { return Polynomial::var(3, three, i); };
    CHECK_THROWS_AS(CyclicAction(three, {x(1) + x(2), x(2) + x(1), x(3)}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicAction(three, {x(1).scaled(FpScalar{2}), x(2), x(3)}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicAction(three, {x(1) * x(1), x(2), x(3)}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicAction(three, {x(1), x(2), x(3)}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicAction(three, {x(1) + x(2)}), std::invalid_argument);
    // a V_3 Jordan block over p = 2 has order 4, not 2
    const Prime two(2);
    auto y = [&](std::size_t i) { return Polynomial::var(3, two, i); };
    CHECK_THROWS_AS(CyclicAction(two, {y(1) + y(2), y(2) + y(3), y(3)}), std::invalid_argument);
    // a V_2 block has order 2, so it is not a faithful C_4 action
    CHECK_THROWS_AS(CyclicAction(Prime(2, 2), {Polynomial::var(2, Prime(2, 2), 1) + Polynomial::var(2, Prime(2, 2), 2),
                                               Polynomial::var(2, Prime(2, 2), 2)}),
                    std::invalid_argument);
    CHECK_NOTHROW(make_action(CaseKind::v2v2, 7));
}

TEST_CASE("delta examples")
{
    const CyclicAction v3 = make_action(CaseKind::v3odd, 3);
    CHECK(delta(v3, P(v3, "x1^2")) == P(v3, "2*x1*x2 + x2^2"));
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const CaseData data = build_case({CaseKind::v3odd, p, 1});
        for (const auto& g : data.hsop)
            CHECK(delta(data.action, g.poly).is_zero());
    }
    std::mt19937_64 rng(3);
    for (const auto& c : property_cases(7))
        for (int i = 0; i < 20; ++i) {
            const Polynomial f = random_polynomial(rng, c.action.num_vars(), c.action.prime(), 4, 5);
            CHECK(delta_pow(c.action, c.action.group_order(), f).is_zero());
            CHECK(delta_pow(c.action, 0, f) == f);
        }
}

TEST_CASE("weights")
{
    const CyclicAction v3 = make_action(CaseKind::v3odd, 5);
    CHECK(weight(v3, Polynomial::constant(3, Prime(5), 4)) == 1);
    CHECK_THROWS_AS(weight(v3, Polynomial(3, Prime(5))), std::domain_error);
    CHECK(weight(v3, P(v3, "x1")) == 3);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const CaseSpec spec{CaseKind::v3odd, p, p};
        const CaseData data = build_case(spec);
        // the first p candidates are M_0, ..., M_{p-1}
        for (std::uint32_t i = 0; i < p; ++i)
            CHECK(weight(data.action, data.candidates[i]) == i + 1);
    }
}

TEST_CASE("V2+V2 weights depend on the x1, x2 exponents only")
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const CyclicAction a = make_action(CaseKind::v2v2, p);
        for (std::uint32_t i = 0; i < p; ++i)
            for (std::uint32_t j = 0; j < p; ++j)
                for (std::uint32_t s = 0; s <= 2; ++s)
                    for (std::uint32_t t = 0; t <= 2; ++t) {
                        const Polynomial m = Polynomial::monomial(Monomial{i, j, s, t}, a.prime());
                        CHECK(weight(a, m) == std::min(i + j + 1, p));
                    }
    }
}

TEST_CASE("transfer")
{
    const CyclicAction c4 = make_action(CaseKind::v3c4, 2);
    const Polynomial f = P(c4, "x1^3 + x2*x3");
    const Polynomial inv = P(c4, "x3^2 + x2^2 + x2*x3");
    CHECK(transfer(c4, Subgroup{0}, inv) == inv);
    CHECK_THROWS_AS(transfer(c4, Subgroup{0}, f), std::domain_error);
    CHECK(transfer(c4, Subgroup{2}, f) == delta_pow(c4, 3, f));
    CHECK_THROWS_AS(transfer(c4, Subgroup{3}, f), std::invalid_argument);

    // x1*x2 is not fixed by sigma^2 (sigma^2 x1 = x1 + x3), so Tr^G_H(x1*x2) is undefined
    const Polynomial x1x2 = P(c4, "x1*x2");
    CHECK_FALSE(is_invariant_under(c4, Subgroup{1}, x1x2));
    CHECK_THROWS_AS(transfer(c4, Subgroup{1}, x1x2), std::domain_error);
    CHECK(x1x2 + act(c4, 1, x1x2) == P(c4, "x1*x3 + x2^2 + x2*x3"));

    const Polynomial nh = P(c4, "x1^2 + x1*x3");
    REQUIRE(is_invariant_under(c4, Subgroup{1}, nh));
    const Polynomial t = transfer(c4, Subgroup{1}, nh);
    CHECK(is_invariant(c4, t));
    // other coset representatives sigma^2, sigma^3 give the same sum
    CHECK(t == act(c4, 2, nh) + act(c4, 3, nh));
    CHECK(t == nh + act(c4, 3, nh));
}

TEST_CASE("transfer is representative independent for random H-invariants")
{
    for (std::uint32_t p : {3u, 5u}) {
        const CyclicAction a = make_action(CaseKind::v2v2, p);
        std::mt19937_64 rng(p);
        for (int i = 0; i < 50; ++i) {
            const Polynomial f = transfer(a, Subgroup{1}, random_polynomial(rng, 4, a.prime(), 3, 4));
            // H = G here, so every sigma^i represents the single coset
            for (std::int64_t r = 0; r < p; ++r)
                CHECK(transfer(a, Subgroup{0}, act(a, r, f)) == f);
        }
    }
}

TEST_CASE("norm")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const CyclicAction a = make_action(CaseKind::v2v2, p);
        const Polynomial x1 = Polynomial::var(4, a.prime(), 1), x3 = Polynomial::var(4, a.prime(), 3);
        CHECK(full_norm(a, x1) == x1.pow(p) - x1 * x3.pow(p - 1));
        CHECK(full_norm(a, x3) == x3.pow(p));
        CHECK(is_invariant(a, full_norm(a, Polynomial::var(4, a.prime(), 2))));
    }
    const CyclicAction c4 = make_action(CaseKind::v3c4, 2);
    CHECK(norm(c4, Subgroup{1}, P(c4, "x2")) == P(c4, "x2^2 + x2*x3"));
    CHECK(norm(c4, Subgroup{1}, P(c4, "x2 + x3")).total_degree() == 2);
    CHECK(norm(c4, Subgroup{2}, P(c4, "x3")) == P(c4, "x3^4"));
    CHECK_THROWS_AS(norm(c4, Subgroup{1}, P(c4, "x1")), std::domain_error);
    CHECK(full_norm(c4, P(c4, "x1")).total_degree() == 4);
}

TEST_CASE("the Leibniz rule needs sigma^i on the second factor")
{
    const CyclicAction v3 = make_action(CaseKind::v3odd, 3);
    const Polynomial one = Polynomial::constant(3, v3.prime(), 1);
    const Polynomial g = P(v3, "x1^2");
    // literal form sum C(k,i) Delta^i(f) sigma^{k-i}(Delta^{k-i} g) at f = 1, k = 1 gives sigma(Delta g)
    CHECK_FALSE(act(v3, 1, delta(v3, g)) == delta(v3, one * g));
    CHECK(leibniz_expansion(v3, 1, one, g) == delta(v3, g));
    for (std::uint64_t k = 0; k <= 3; ++k)
        CHECK(leibniz_expansion(v3, k, P(v3, "x1*x2 + x3"), g) == delta_pow(v3, k, P(v3, "x1*x2 + x3") * g));
}

TEST_CASE("operator property suites")
{
    std::uint64_t seed = 99;
    for (const auto& c : property_cases(7))
        for (const auto& rep : run_property_suite(c, 500, seed++)) {
            INFO(c.label << " " << rep.property << (rep.examples.empty() ? "" : ": " + rep.examples.front()));
            CHECK(rep.samples == 500);
            CHECK(rep.ok());
        }
}
