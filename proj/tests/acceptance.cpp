// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.
#include "modcov/cli.hpp"
#include "modcov/properties.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace modcov;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why)
    {
        if (ok)
            note = why;
        ok = false;
    }
};

struct VerifyRun {
    int code;
    nlohmann::json doc;
    double seconds;
};

VerifyRun verify(const CaseSpec& spec, std::vector<std::string> extra = {})
{
    std::vector<std::string> args{"verify", "--case", std::string(kind_name(spec.kind)), "--p",
                                  std::to_string(spec.p), "--n", std::to_string(spec.n), "--json", "-"};
    args.insert(args.end(), extra.begin(), extra.end());
    std::ostringstream out, err;
    const auto start = Clock::now();
    const int code = run_cli(args, out, err);
    VerifyRun r{code, nullptr, seconds_since(start)};
    if (code == 0 || code == 1)
        r.doc = nlohmann::json::parse(out.str());
    return r;
}

// Certifies one instance through the CLI and compares (count, degree sum).
void expect_certificate(Outcome& o, const CaseSpec& spec, std::int64_t count, std::int64_t sum, double limit_s)
{
    const VerifyRun r = verify(spec);
    const std::string who = describe(spec);
    if (r.code != 0)
        return o.fail(who + " exit " + std::to_string(r.code));
    if (r.doc["freetest"]["count"] != count || r.doc["freetest"]["degree_sum"] != sum)
        o.fail(who + " count/degree sum " + r.doc["freetest"]["count"].dump() + "/" +
               r.doc["freetest"]["degree_sum"].dump());
    if (r.seconds > limit_s)
        o.fail(who + " took " + std::to_string(r.seconds) + " s");
}

Outcome ac1()
{
    Outcome o;
    const auto start = Clock::now();
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::uint32_t n = 1; n <= p; ++n)
            expect_certificate(o, {CaseKind::v3odd, p, n}, 2 * n, std::int64_t(n) * p, 30);
    const double total = seconds_since(start);
    if (total > 300)
        o.fail("full set took " + std::to_string(total) + " s");
    if (o.ok)
        o.note = "21 instances in " + std::to_string(total) + " s";
    return o;
}

Outcome ac2()
{
    Outcome o;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t n = 1; n <= p; ++n)
            expect_certificate(o, {CaseKind::v2v2, p, n}, std::int64_t(n) * p, std::int64_t(n) * p * (p - 1),
                               p == 5 && n == 5 ? 60 : 1e9);
    SliceEngine engine(make_action(CaseKind::v2v2, 5));
    const std::size_t dim8 = engine.basis(8)->dim();
    if (dim8 > 165)
        o.fail("slice dim " + std::to_string(dim8) + " at d=8");
    const VerifyRun largest = verify({CaseKind::v2v2, 5, 5});
    if (largest.doc["per_degree"].back()["d"] != 8)
        o.fail("largest instance stops at degree " + largest.doc["per_degree"].back()["d"].dump());
    if (o.ok)
        o.note = "p=5 n=5 in " + std::to_string(largest.seconds) + " s, dim at d=8 is " + std::to_string(dim8);
    return o;
}

Outcome ac3()
{
    Outcome o;
    const std::int64_t s_values[] = {3, 6, 11, 16};
    for (std::uint32_t n = 2; n <= 4; ++n)
        expect_certificate(o, {CaseKind::v3c4, 2, n}, 2 * n, s_values[n - 1], 1e9);
    SliceEngine engine(make_action(CaseKind::v3c4, 2));
    if (engine.kernel(1, 2)->rank() != 2)
        o.fail("dim k[V]^G_2 = " + std::to_string(engine.kernel(1, 2)->rank()));
    return o;
}

Outcome ac4()
{
    Outcome o;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t n = 1; n <= p; ++n) {
            const CaseData data = build_case({CaseKind::v2, p, n});
            for (std::uint32_t k = 0; k < n; ++k) {
                std::vector<std::uint32_t> e{k, 0};
                if (data.candidates[k] != Polynomial::monomial(Monomial(std::span<const std::uint32_t>(e)),
                                                               data.action.prime()))
                    o.fail(describe(data.spec) + " candidate " + std::to_string(k) + " is not x1^k");
            }
            expect_certificate(o, {CaseKind::v2, p, n}, n, std::int64_t(n) * (n - 1) / 2, 1e9);
        }
    return o;
}

Outcome ac5()
{
    Outcome o;
    auto check = [&](const CaseSpec& spec, std::size_t size, std::int64_t s) {
        const VerifyRun r = verify(spec);
        const auto& sec = r.doc["secondary_certificate"];
        if (r.code != 0 || !sec.is_object() || sec["verdict"] != "verified")
            return o.fail(describe(spec) + " secondary invariants not certified");
        if (sec["candidates"].size() != size || sec["freetest"]["degree_sum"] != s)
            o.fail(describe(spec) + " secondary set " + sec["candidates"].dump());
    };
    for (std::uint32_t p : {3u, 5u, 7u})
        check({CaseKind::v3odd, p, 1}, 2, p);
    for (std::uint32_t p : {2u, 3u, 5u})
        check({CaseKind::v2v2, p, 1}, p, std::int64_t(p) * (p - 1));
    check({CaseKind::v3c4, 2, 1}, 2, 3);
    return o;
}

RankS closed_form(const CaseSpec& spec)
{
    const std::int64_t n = spec.n, p = spec.p;
    switch (spec.kind) {
    case CaseKind::v2:
        return {n, n * (n - 1) / 2};
    case CaseKind::v3odd:
        return {2 * n, n * p};
    case CaseKind::v2v2:
        return {n * p, n * p * (p - 1)};
    case CaseKind::v3c4: {
        constexpr std::int64_t s[] = {3, 6, 11, 16};
        return {2 * n, s[n - 1]};
    }
    }
    return {};
}

Outcome ac6()
{
    Outcome o;
    for (const auto& spec : acceptance_instances(7)) {
        Certifier c(build_case(spec));
        const RankS rs = rank_s(c.kernel_numerator(spec.n));
        const RankS want = closed_form(spec);
        if (!(rs == want))
            o.fail(describe(spec) + " (r, s) = (" + std::to_string(rs.r) + ", " + std::to_string(rs.s) + ")");
        const SubalgebraReport sub = check_subalgebra_identities(c.kernel_numerator(spec.n), c.kernel_numerator(1));
        if (!sub.ok())
            o.fail(describe(spec) + " subalgebra " + sub.to_string());
        if ((spec.kind == CaseKind::v3odd || spec.kind == CaseKind::v2v2) && sub.module_over_a.s != 0)
            o.fail(describe(spec) + " s(K_n, k[V]^G) = " + std::to_string(sub.module_over_a.s));
    }
    return o;
}

Outcome ac7()
{
    Outcome o;
    const std::vector<std::string> required{"twisted-derivation", "leibniz",          "power-rule",
                                            "sigma-delta-commute", "delta-q-vanishes", "delta-q-1-is-transfer",
                                            "weight-product"};
    std::uint64_t seed = 7;
    for (const auto& c : property_cases(7)) {
        const auto reports = run_property_suite(c, 500, seed++);
        for (const auto& name : required) {
            const auto it = std::find_if(reports.begin(), reports.end(),
                                         [&](const PropertyReport& r) { return r.property == name; });
            if (it == reports.end())
                o.fail(c.label + " " + name + " missing");
            else if (!it->ok() || it->samples != 500 || it->applicable == 0)
                o.fail(c.label + " " + name + ": " + std::to_string(it->failures) + " failures");
        }
    }
    return o;
}

Outcome ac8()
{
    Outcome o;
    for (const auto& spec : acceptance_instances(7)) {
        Certifier c(build_case(spec));
        const std::uint32_t bound = std::max(max_degree(c.data().candidates), c.canonical_top(spec.n));
        const XiReport rep = check_xi(c.engine(), spec.n, bound);
        if (!rep.ok())
            o.fail(describe(spec) + ": " + (rep.failures.empty() ? "xi check failed" : rep.failures.front()));
    }
    return o;
}

Outcome ac9()
{
    Outcome o;
    auto run = [&](Lemma lemma, std::initializer_list<std::uint32_t> primes) {
        for (auto p : primes) {
            const LemmaReport rep = lead_term_lemma_check(p, lemma, lemma_order(lemma));
            if (!rep.ok() || rep.checked == 0)
                o.fail(std::string(lemma_name(lemma)) + " p=" + std::to_string(p) +
                       (rep.failures.empty() ? "" : ": " + rep.failures.front()));
        }
    };
    if (lemma_order(Lemma::x1_power) != MonomialOrder::graded_revlex || lemma_order(Lemma::v2v2_lead) != MonomialOrder::graded_lex)
        o.fail("lemma term orders");
    run(Lemma::x1_power, {3, 5, 7});
    run(Lemma::x1_power_x2, {3, 5, 7});
    run(Lemma::v2v2_lead, {3, 5});
    run(Lemma::obs, {3, 5, 7});
    return o;
}

Outcome ac10()
{
    Outcome o;
    std::size_t mutants = 0;
    for (const auto& spec : acceptance_instances(7)) {
        Certifier c(build_case(spec));
        const CaseData& data = c.data();
        for (std::size_t i = 0; i < data.candidates.size(); ++i) {
            ++mutants;
            if (c.certify(spec.n, drop_candidate(data.candidates, i)).verdict.verified)
                o.fail(describe(spec) + " survives dropping " + std::to_string(i));
            for (std::size_t h = 0; h < data.hsop.size(); ++h) {
                ++mutants;
                if (c.certify(spec.n, scale_candidate(data, data.candidates, i, h)).verdict.verified)
                    o.fail(describe(spec) + " survives scaling " + std::to_string(i) + " by hsop " +
                           std::to_string(h));
            }
        }
        const std::string last = std::to_string(data.candidates.size() - 1);
        if (verify(spec, {"--drop", last}).code != 1)
            o.fail(describe(spec) + " --drop exit code");
        if (verify(spec, {"--scale", "0:0"}).code != 1)
            o.fail(describe(spec) + " --scale exit code");
    }
    if (o.ok)
        o.note = std::to_string(mutants) + " mutants rejected";
    return o;
}

Outcome ac11()
{
    Outcome o;
    SliceEngine engine(make_action(CaseKind::v3c4, 2));
    for (std::uint32_t d = 0; d <= 12; ++d) {
        const std::size_t t = transfer_kernel_slice(engine.action(), Subgroup{1}, d).rank();
        const std::size_t k = engine.kernel(1, d)->rank();
        if (t != k)
            o.fail("d=" + std::to_string(d) + ": " + std::to_string(t) + " vs " + std::to_string(k));
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 V3 certificates, count 2n and degree sum np, within time limits", ac1},
        {"AC2 V2+V2 certificates, count np and degree sum np(p-1), largest within 60 s", ac2},
        {"AC3 C4 certificates for n=2,3,4 with s = 6, 11, 16 and two quadratic invariants", ac3},
        {"AC4 V2 powers of x1 certify for p <= 7", ac4},
        {"AC5 secondary invariants certify with exact s", ac5},
        {"AC6 rank and s closed forms and subalgebra identities", ac6},
        {"AC7 operator property suites, 500 samples per case", ac7},
        {"AC8 Xi slices match covariant slices", ac8},
        {"AC9 lead-term lemmas", ac9},
        {"AC10 every drop or hsop-scale mutant is rejected", ac10},
        {"AC11 C4 transfer kernel matches the invariants for d <= 12", ac11},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(start));
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " (" << timing << ")";
        if (!o.note.empty())
            std::cout << "  " << o.note;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
