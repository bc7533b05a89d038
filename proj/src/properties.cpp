#include "modcov/properties.hpp"

#include "modcov/cases.hpp"

#include <functional>

namespace modcov {

Polynomial random_monomial(std::mt19937_64& rng, std::size_t nvars, const Prime& prime, std::uint32_t max_degree)
{
    std::uniform_int_distribution<std::uint32_t> deg_dist(0, max_degree);
    std::uniform_int_distribution<std::size_t> var_dist(0, nvars - 1);
    std::vector<std::uint32_t> exps(nvars, 0);
    for (std::uint32_t d = deg_dist(rng); d > 0; --d)
        ++exps[var_dist(rng)];
    return Polynomial::monomial(Monomial(std::span<const std::uint32_t>(exps)), prime);
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, const Prime& prime, std::uint32_t max_degree,
                             std::size_t max_terms)
{
    std::uniform_int_distribution<std::size_t> terms_dist(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> coeff_dist(1, prime.p() - 1);
    Polynomial f(nvars, prime);
    for (std::size_t t = terms_dist(rng); t > 0; --t)
        f += random_monomial(rng, nvars, prime, max_degree).scaled(FpScalar{coeff_dist(rng)});
    return f;
}

Polynomial leibniz_expansion(const CyclicAction& a, std::uint64_t k, const Polynomial& f, const Polynomial& g)
{
    Polynomial sum(f.num_vars(), f.prime());
    Polynomial df = f;
    for (std::uint64_t i = 0; i <= k; ++i) {
        const FpScalar c = binom_mod(k, i, a.prime());
        if (!c.is_zero() && !df.is_zero())
            sum += (df * act(a, static_cast<std::int64_t>(i), delta_pow(a, k - i, g))).scaled(c);
        df = delta(a, df);
    }
    return sum;
}

Polynomial power_rule_expansion(const CyclicAction& a, std::uint32_t k, const Polynomial& f)
{
    const Polynomial sf = act(a, 1, f);
    Polynomial sum(f.num_vars(), f.prime());
    for (std::uint32_t i = 0; i < k; ++i)
        sum += f.pow(i) * sf.pow(k - 1 - i);
    return delta(a, f) * sum;
}

std::vector<PropertyCase> property_cases(std::uint32_t max_p)
{
    std::vector<PropertyCase> out;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        if (p > max_p)
            break;
        out.push_back({"v2 p=" + std::to_string(p), make_action(CaseKind::v2, p)});
        if (p > 2)
            out.push_back({"v3 p=" + std::to_string(p), make_action(CaseKind::v3odd, p)});
        out.push_back({"v2v2 p=" + std::to_string(p), make_action(CaseKind::v2v2, p)});
        if (p == 2)
            out.push_back({"v3c4 p=2", make_action(CaseKind::v3c4, 2)});
    }
    return out;
}

namespace {

using Check = std::function<std::optional<bool>(std::mt19937_64&, std::string&)>;

PropertyReport run(const PropertyCase& c, const std::string& name, std::size_t samples, std::uint64_t seed,
                   const Check& check)
{
    PropertyReport rep{name, c.label};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        std::string witness;
        const auto result = check(rng, witness);
        ++rep.samples;
        if (!result)
            continue;
        ++rep.applicable;
        if (!*result) {
            ++rep.failures;
            if (rep.examples.size() < 3)
                rep.examples.push_back(witness);
        }
    }
    return rep;
}

} // namespace

std::vector<PropertyReport> run_property_suite(const PropertyCase& c, std::size_t samples, std::uint64_t seed)
{
    const CyclicAction& a = c.action;
    const std::size_t m = a.num_vars();
    const Prime& prime = a.prime();
    const std::uint64_t q = a.group_order();
    auto poly = [&](std::mt19937_64& rng) { return random_polynomial(rng, m, prime, 3, 4); };

    std::vector<PropertyReport> out;
    out.push_back(run(c, "twisted-derivation", samples, seed, [&](std::mt19937_64& rng, std::string& w) {
        const Polynomial f = poly(rng), g = poly(rng);
        w = "f = " + format(f) + ", g = " + format(g);
        return delta(a, f * g) == f * delta(a, g) + delta(a, f) * act(a, 1, g);
    }));
    out.push_back(run(c, "leibniz", samples, seed + 1, [&](std::mt19937_64& rng, std::string& w) {
        const Polynomial f = poly(rng), g = poly(rng);
        const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, q)(rng);
        w = "k = " + std::to_string(k) + ", f = " + format(f) + ", g = " + format(g);
        return delta_pow(a, k, f * g) == leibniz_expansion(a, k, f, g);
    }));
    out.push_back(run(c, "power-rule", samples, seed + 2, [&](std::mt19937_64& rng, std::string& w) {
        const Polynomial f = random_polynomial(rng, m, prime, 2, 3);
        const std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(1, 4)(rng);
        w = "k = " + std::to_string(k) + ", f = " + format(f);
        return delta(a, f.pow(k)) == power_rule_expansion(a, k, f);
    }));
    out.push_back(run(c, "sigma-delta-commute", samples, seed + 3, [&](std::mt19937_64& rng, std::string& w) {
        const Polynomial f = poly(rng);
        w = "f = " + format(f);
        return act(a, 1, delta(a, f)) == delta(a, act(a, 1, f));
    }));
    out.push_back(run(c, "delta-q-vanishes", samples, seed + 4, [&](std::mt19937_64& rng, std::string& w) {
        const Polynomial f = poly(rng);
        w = "f = " + format(f);
        return delta_pow(a, q, f).is_zero();
    }));
    out.push_back(run(c, "delta-q-1-is-transfer", samples, seed + 5, [&](std::mt19937_64& rng, std::string& w) {
        const Polynomial f = poly(rng);
        w = "f = " + format(f);
        return delta_pow(a, q - 1, f) == transfer(a, Subgroup{prime.k()}, f);
    }));
    out.push_back(run(c, "weight-product", samples, seed + 6,
                      [&](std::mt19937_64& rng, std::string& w) -> std::optional<bool> {
                          const Polynomial f = random_monomial(rng, m, prime, 3);
                          const Polynomial g = random_monomial(rng, m, prime, 3);
                          const std::uint64_t wf = weight(a, f), wg = weight(a, g);
                          if (wf + wg - 1 > prime.p())
                              return std::nullopt;
                          w = "f = " + format(f) + ", g = " + format(g);
                          return weight(a, f * g) == wf + wg - 1;
                      }));
    out.push_back(run(c, "kernel-characterization", samples, seed + 7, [&](std::mt19937_64& rng, std::string& w) {
        Polynomial f = poly(rng);
        // half the samples are pushed into the invariants
        if (rng() % 2 == 0)
            f = transfer(a, Subgroup{prime.k()}, f);
        w = "f = " + format(f);
        bool fixed = true;
        for (std::uint64_t i = 0; i < q && fixed; ++i)
            fixed = act(a, static_cast<std::int64_t>(i), f) == f;
        return is_invariant(a, f) == fixed;
    }));
    return out;
}

} // namespace modcov
