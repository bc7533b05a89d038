#include "modcov/cases.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace modcov {

std::string_view kind_name(CaseKind kind)
{
    switch (kind) {
    case CaseKind::v2:
        return "v2";
    case CaseKind::v3odd:
        return "v3";
    case CaseKind::v2v2:
        return "v2v2";
    case CaseKind::v3c4:
        return "v3c4";
    }
    return "?";
}

std::optional<CaseKind> parse_kind(std::string_view name)
{
    for (auto k : {CaseKind::v2, CaseKind::v3odd, CaseKind::v2v2, CaseKind::v3c4})
        if (kind_name(k) == name)
            return k;
    return std::nullopt;
}

std::uint32_t group_exponent(CaseKind kind)
{
    return kind == CaseKind::v3c4 ? 2 : 1;
}

void validate(const CaseSpec& spec)
{
    if (spec.p < 2 || spec.p > Prime::kMaxP || !is_prime(spec.p))
        throw std::invalid_argument("p = " + std::to_string(spec.p) + " is not a prime in [2, 97]");
    if (spec.kind == CaseKind::v3odd && spec.p == 2)
        throw std::invalid_argument("case v3 requires an odd prime");
    if (spec.kind == CaseKind::v3c4 && spec.p != 2)
        throw std::invalid_argument("case v3c4 is defined over p = 2 only");
    const std::uint32_t max_n = spec.kind == CaseKind::v3c4 ? 4 : spec.p;
    if (spec.n < 1 || spec.n > max_n)
        throw std::invalid_argument("n = " + std::to_string(spec.n) + " is outside [1, " + std::to_string(max_n) + "]");
}

std::string describe(const CaseSpec& spec)
{
    return std::string(kind_name(spec.kind)) + "(p=" + std::to_string(spec.p) + ", n=" + std::to_string(spec.n) + ")";
}

namespace {

struct Ring {
    std::size_t m;
    Prime prime;

    Polynomial x(std::size_t i) const { return Polynomial::var(m, prime, i); }
    Polynomial c(std::int64_t v) const { return Polynomial::constant(m, prime, v); }
};

Ring ring_for(CaseKind kind, std::uint32_t p)
{
    const std::size_t m = kind == CaseKind::v2 ? 2 : kind == CaseKind::v2v2 ? 4 : 3;
    return Ring{m, Prime(p, group_exponent(kind))};
}

Polynomial v2v2_u(const Ring& r)
{
    return r.x(1) * r.x(4) - r.x(2) * r.x(3);
}

Polynomial c4_u(const Ring& r)
{
    return r.x(1).pow(2) * r.x(3) + r.x(1) * r.x(3).pow(2) + r.x(2).pow(3) + r.x(2).pow(2) * r.x(3);
}

// N^H(x1) for H = <sigma^2> in C_4.
Polynomial c4_subgroup_norm_x1(const CyclicAction& a, const Ring& r)
{
    return r.x(1) * act(a, 2, r.x(1));
}

std::vector<Polynomial> v3odd_candidates(const CyclicAction& a, const Ring& r, std::uint32_t p, std::uint32_t n)
{
    std::vector<Polynomial> out;
    for (std::uint32_t i = 0; i < n; ++i)
        out.push_back(i % 2 == 0 ? r.x(1).pow(i / 2) : r.x(1).pow((i - 1) / 2) * r.x(2));
    for (std::uint32_t i = 0; i < n; ++i) {
        Polynomial pi = i == 0       ? r.x(1).pow(p - 1) * r.x(2)
                        : i % 2 == 0 ? delta(a, r.x(1).pow(p - i / 2))
                                     : r.x(1).pow(p - (i + 1) / 2);
        out.push_back(delta_pow(a, p - n, pi));
    }
    return out;
}

std::vector<Polynomial> layer(const Ring& r, std::uint32_t p, std::uint32_t k)
{
    std::vector<Polynomial> out;
    for (std::uint32_t i = std::min(k, p - 1) + 1; i-- > 0;) {
        const std::uint32_t j = k - i;
        if (j >= p)
            break;
        out.push_back(r.x(1).pow(i) * r.x(2).pow(j));
    }
    return out;
}

std::vector<Polynomial> v2v2_candidates(const CyclicAction& a, const Ring& r, std::uint32_t p, std::uint32_t n)
{
    std::vector<Polynomial> out;
    for (std::uint32_t k = 0; k < n; ++k)
        for (auto& m : layer(r, p, k))
            out.push_back(std::move(m));
    const Polynomial u = v2v2_u(r);
    const auto top = layer(r, p, n - 1);
    for (std::uint32_t k = 1; k + n <= p; ++k)
        for (const auto& m : top)
            out.push_back(u.pow(k) * m);
    for (std::uint32_t k = 2 * p - n; k <= 2 * p - 2; ++k)
        for (const auto& m : layer(r, p, k))
            out.push_back(delta_pow(a, p - n, m));
    return out;
}

std::vector<Polynomial> v3c4_candidates(const CyclicAction& a, const Ring& r, std::uint32_t n)
{
    const Polynomial x1 = r.x(1), x2 = r.x(2);
    switch (n) {
    case 1:
        return {r.c(1), c4_u(r)};
    case 2: {
        const Polynomial nh = c4_subgroup_norm_x1(a, r);
        return {r.c(1), x2, nh, x2 * nh};
    }
    case 3:
        return {r.c(1), x1, x2, x1.pow(2), delta(a, x1.pow(3)), delta(a, x1.pow(3) * x2)};
    default:
        return {r.c(1), x1, x2, x1.pow(2), x1 * x2, x1.pow(3), x1.pow(2) * x2, x1.pow(3) * x2};
    }
}

std::vector<Polynomial> candidates_for(const CaseSpec& spec, const CyclicAction& a, const Ring& r)
{
    switch (spec.kind) {
    case CaseKind::v2: {
        std::vector<Polynomial> out;
        for (std::uint32_t k = 0; k < spec.n; ++k)
            out.push_back(r.x(1).pow(k));
        return out;
    }
    case CaseKind::v3odd:
        return v3odd_candidates(a, r, spec.p, spec.n);
    case CaseKind::v2v2:
        return v2v2_candidates(a, r, spec.p, spec.n);
    case CaseKind::v3c4:
        return v3c4_candidates(a, r, spec.n);
    }
    return {};
}

} // namespace

CyclicAction make_action(CaseKind kind, std::uint32_t p)
{
    const Ring r = ring_for(kind, p);
    switch (kind) {
    case CaseKind::v2:
        return CyclicAction(r.prime, {r.x(1) + r.x(2), r.x(2)});
    case CaseKind::v2v2:
        return CyclicAction(r.prime, {r.x(1) + r.x(3), r.x(2) + r.x(4), r.x(3), r.x(4)});
    case CaseKind::v3odd:
    case CaseKind::v3c4:
        return CyclicAction(r.prime, {r.x(1) + r.x(2), r.x(2) + r.x(3), r.x(3)});
    }
    throw std::invalid_argument("make_action: unknown case");
}

RankS expected_rank_s(const CaseSpec& spec)
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
        static constexpr std::int64_t s_values[] = {0, 3, 6, 11, 16};
        return {2 * n, s_values[spec.n]};
    }
    }
    return {};
}

std::vector<std::uint32_t> CaseData::hsop_degrees() const
{
    std::vector<std::uint32_t> out;
    for (const auto& g : hsop)
        out.push_back(g.degree);
    return out;
}

CaseData build_case(const CaseSpec& spec)
{
    validate(spec);
    const Ring r = ring_for(spec.kind, spec.p);
    CyclicAction a = make_action(spec.kind, spec.p);
    const std::uint32_t p = spec.p;

    std::vector<AlgebraGenerator> hsop;
    std::vector<Polynomial> secondary;
    switch (spec.kind) {
    case CaseKind::v2:
        hsop = {{r.x(2), 1}, {full_norm(a, r.x(1)), p}};
        secondary = {r.c(1)};
        break;
    case CaseKind::v3odd: {
        const Polynomial a2 = r.x(2).pow(2) - r.x(1) * r.x(3) * r.c(2) - r.x(2) * r.x(3);
        hsop = {{r.x(3), 1}, {a2, 2}, {full_norm(a, r.x(1)), p}};
        secondary = {r.c(1), full_norm(a, r.x(2))};
        break;
    }
    case CaseKind::v2v2: {
        hsop = {{r.x(3), 1}, {r.x(4), 1}, {full_norm(a, r.x(1)), p}, {full_norm(a, r.x(2)), p}};
        const Polynomial u = v2v2_u(r);
        for (std::uint32_t i = 0; i < p; ++i)
            secondary.push_back(u.pow(i));
        break;
    }
    case CaseKind::v3c4:
        hsop = {{full_norm(a, r.x(1)), 4}, {norm(a, Subgroup{1}, r.x(2)), 2}, {r.x(3), 1}};
        secondary = {r.c(1), c4_u(r)};
        break;
    }

    for (const auto& g : hsop)
        if (!is_invariant(a, g.poly) || !g.poly.is_homogeneous() || g.poly.total_degree() != g.degree)
            throw std::logic_error("build_case: hsop element " + format(g.poly) + " is not a homogeneous invariant");
    for (const auto& s : secondary)
        if (!is_invariant(a, s))
            throw std::logic_error("build_case: secondary element " + format(s) + " is not invariant");
    std::uint64_t degree_product = 1;
    for (const auto& g : hsop)
        degree_product *= g.degree;
    if (degree_product % a.group_order() != 0 || degree_product / a.group_order() != secondary.size())
        throw std::logic_error("build_case: hsop degree product / |G| differs from the number of secondaries");

    auto candidates = candidates_for(spec, a, r);
    RankS expected = expected_rank_s(spec);
    RankS invariants = expected_rank_s(CaseSpec{spec.kind, spec.p, 1});
    return CaseData{spec, std::move(a), std::move(hsop), std::move(secondary), expected, invariants,
                    std::move(candidates)};
}

std::vector<Polynomial> candidate_generators(const CaseSpec& spec)
{
    validate(spec);
    const Ring r = ring_for(spec.kind, spec.p);
    return candidates_for(spec, make_action(spec.kind, spec.p), r);
}

std::uint32_t max_degree(const std::vector<Polynomial>& polys)
{
    std::uint32_t d = 0;
    for (const auto& f : polys)
        d = std::max(d, f.total_degree());
    return d;
}

std::vector<Polynomial> v2v2_layer(const CaseData& data, std::uint32_t k)
{
    if (data.spec.kind != CaseKind::v2v2)
        throw std::invalid_argument("v2v2_layer: not a V2+V2 case");
    return layer(ring_for(CaseKind::v2v2, data.spec.p), data.spec.p, k);
}

Covariant xi(const CyclicAction& a, std::uint32_t n, const Polynomial& f)
{
    Covariant phi;
    Polynomial g = f;
    for (std::uint32_t i = 0; i < n; ++i) {
        phi.components.push_back(g);
        g = delta(a, g);
    }
    if (!g.is_zero())
        throw std::domain_error("xi: " + format(f) + " is not in ker(Delta^" + std::to_string(n) + ")");
    return phi;
}

Covariant act_diagonal(const CyclicAction& a, const Covariant& phi)
{
    const std::size_t n = phi.components.size();
    const std::uint32_t p = a.prime().p();
    std::vector<Polynomial> moved;
    for (const auto& f : phi.components)
        moved.push_back(act(a, 1, f));
    Covariant out;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial c(a.num_vars(), a.prime());
        for (std::size_t j = i; j < n; ++j)
            c += (j - i) % 2 == 0 ? moved[j] : moved[j].scaled(FpScalar{p - 1});
        out.components.push_back(std::move(c));
    }
    return out;
}

bool is_covariant(const CyclicAction& a, std::uint32_t n, const Covariant& phi)
{
    if (phi.components.size() != n)
        throw std::invalid_argument("is_covariant: expected " + std::to_string(n) + " components, got " +
                                    std::to_string(phi.components.size()));
    const Covariant moved = act_diagonal(a, phi);
    for (std::size_t i = 0; i < n; ++i)
        if (!(moved.components[i] == phi.components[i]))
            return false;
    return true;
}

Vec covariant_coords(const SliceBasis& basis, const Covariant& phi)
{
    const std::size_t dim = basis.dim();
    Vec out(dim * phi.components.size(), 0);
    for (std::size_t j = 0; j < phi.components.size(); ++j) {
        Vec c = basis.coords(phi.components[j]);
        std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(j * dim));
    }
    return out;
}

SubspaceSlice covariant_slice(SliceEngine& engine, std::uint32_t n, std::uint32_t d)
{
    auto basis = engine.basis(d);
    auto sigma = engine.sigma(d);
    auto parts = engine.blocks(d);
    const std::uint32_t p = engine.modulus();
    const std::size_t dim = basis->dim();

    std::vector<std::pair<std::size_t, Vec>> rows;
    std::vector<std::size_t> local(dim, 0);
    for (const auto& block : *parts) {
        const std::size_t b = block.size();
        for (std::size_t t = 0; t < b; ++t)
            local[block[t]] = t;
        // input component j feeds output component i <= j through (-1)^(j-i) sigma
        Matrix l(n * b, n * b, p);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i <= j; ++i) {
                const Residue sign = (j - i) % 2 == 0 ? 1 : p - 1;
                for (std::size_t t = 0; t < b; ++t)
                    for (const auto& [col, val] : (*sigma)[block[t]])
                        l.at(j * b + t, i * b + local[col]) = static_cast<Residue>(std::uint64_t{sign} * val % p);
            }
        for (std::size_t r = 0; r < n * b; ++r)
            l.at(r, r) = ff_sub(FpScalar{l.at(r, r)}, FpScalar{1}, p).value;
        auto fixed = SubspaceSlice::span(d, n * b, p, left_nullspace(l));
        for (std::size_t r = 0; r < fixed.rank(); ++r) {
            Vec global(n * dim, 0);
            for (std::size_t idx = 0; idx < n * b; ++idx)
                global[(idx / b) * dim + block[idx % b]] = fixed.rows()[r][idx];
            const std::size_t lp = fixed.pivots()[r];
            rows.emplace_back((lp / b) * dim + block[lp % b], std::move(global));
        }
    }
    return SubspaceSlice::merge_disjoint(d, n * dim, p, std::move(rows));
}

XiReport check_xi(SliceEngine& engine, std::uint32_t n, std::uint32_t max_degree)
{
    XiReport rep;
    rep.max_degree = max_degree;
    const CyclicAction& a = engine.action();
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
        auto basis = engine.basis(d);
        auto kernel = engine.kernel(n, d);
        const SubspaceSlice cov = covariant_slice(engine, n, d);
        if (cov.rank() != kernel->rank()) {
            rep.dims_match = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": dim covariants " + std::to_string(cov.rank()) +
                                   " != dim kernel " + std::to_string(kernel->rank()));
        }
        SubspaceSlice image(d, n * basis->dim(), engine.modulus());
        for (const auto& row : kernel->rows()) {
            const Polynomial f = basis->to_poly(row, a.prime());
            const Covariant phi = xi(a, n, f);
            const Vec coords = covariant_coords(*basis, phi);
            if (!is_covariant(a, n, phi) || !cov.contains(coords)) {
                rep.all_covariant = false;
                rep.failures.push_back("degree " + std::to_string(d) + ": Xi(" + format(f) + ") is not a covariant");
            }
            image.insert(coords);
        }
        if (image.rank() != kernel->rank()) {
            rep.full_rank = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": Xi has rank " + std::to_string(image.rank()) +
                                   " on a kernel slice of dimension " + std::to_string(kernel->rank()));
        }
    }
    return rep;
}

std::string_view lemma_name(Lemma lemma)
{
    switch (lemma) {
    case Lemma::x1_power:
        return "x1-power";
    case Lemma::x1_power_x2:
        return "x1-power-x2";
    case Lemma::v2v2_lead:
        return "v2v2-lead";
    case Lemma::obs:
        return "obs";
    }
    return "?";
}

MonomialOrder lemma_order(Lemma lemma)
{
    return lemma == Lemma::v2v2_lead ? MonomialOrder::graded_lex : MonomialOrder::graded_revlex;
}

namespace {

std::string term_text(const Term& t)
{
    return std::to_string(t.coeff.value) + "*" + format(t.mono);
}

void expect_lead(LemmaReport& rep, const std::string& what, const Polynomial& g, const Monomial& mono,
                 std::optional<FpScalar> coeff)
{
    ++rep.checked;
    if (g.is_zero()) {
        rep.failures.push_back(what + " vanishes");
        return;
    }
    const Term lt = lead_term(g, rep.order);
    if (!(lt.mono == mono) || (coeff && !(lt.coeff == *coeff)))
        rep.failures.push_back(what + ": lead term " + term_text(lt) + ", expected " +
                               (coeff ? std::to_string(coeff->value) : std::string("c")) + "*" + format(mono));
}

void check_v3_powers(LemmaReport& rep, bool times_x2)
{
    const std::uint32_t p = rep.p;
    const CyclicAction a = make_action(CaseKind::v3odd, p);
    const Ring r = ring_for(CaseKind::v3odd, p);
    for (std::uint32_t k = 0; k < p; ++k) {
        Polynomial g = times_x2 ? r.x(1).pow(k) * r.x(2) : r.x(1).pow(k);
        for (std::uint32_t j = 0; j <= k; ++j) {
            const Monomial mono{k - j, j + (times_x2 ? 1u : 0u), 0};
            expect_lead(rep,
                        "Delta^" + std::to_string(j) + "(x1^" + std::to_string(k) + (times_x2 ? "*x2)" : ")"), g,
                        mono, falling_factorial_mod(k, j, p));
            g = delta(a, g);
        }
    }
}

void check_v2v2(LemmaReport& rep)
{
    const std::uint32_t p = rep.p;
    const Prime prime(p);
    const CyclicAction a = make_action(CaseKind::v2v2, p);
    const Ring r = ring_for(CaseKind::v2v2, p);
    std::size_t second_branch = 0, binomial_matches = 0;
    for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j) {
            Polynomial g = r.x(1).pow(i) * r.x(2).pow(j);
            // Delta^k vanishes once k reaches the weight min(i + j + 1, p)
            for (std::uint32_t k = 0; k <= i + j && k < p; ++k) {
                const std::string what = "Delta^" + std::to_string(k) + "(x1^" + std::to_string(i) + "*x2^" +
                                         std::to_string(j) + ")";
                if (k <= j) {
                    expect_lead(rep, what, g, Monomial{i, j - k, 0, k}, falling_factorial_mod(j, k, p));
                } else {
                    expect_lead(rep, what, g, Monomial{i + j - k, 0, k - j, j}, std::nullopt);
                    if (!g.is_zero()) {
                        const Term lt = lead_term(g, rep.order);
                        ++second_branch;
                        // C(k, j) i! j! / (i + j - k)!
                        FpScalar guess = ff_mul(binom_mod(k, j, prime),
                                                ff_mul(falling_factorial_mod(i, k - j, p),
                                                       falling_factorial_mod(j, j, p), p),
                                                p);
                        if (guess == lt.coeff)
                            ++binomial_matches;
                    }
                }
                g = delta(a, g);
            }
        }
    rep.observations.push_back("j < k <= i+j branch: lead coefficient equals C(k,j)*i!*j!/(i+j-k)! in " +
                               std::to_string(binomial_matches) + " of " + std::to_string(second_branch) + " cases");
}

void check_obs(LemmaReport& rep, std::uint64_t seed)
{
    const std::uint32_t p = rep.p;
    const CaseData data = build_case(CaseSpec{CaseKind::v3odd, p, 1});
    const Ring r = ring_for(CaseKind::v3odd, p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> degree_dist(1, 3 * p);
    std::uniform_int_distribution<std::uint32_t> coeff_dist(0, p - 1);
    const Polynomial& a1 = data.hsop[0].poly;
    const Polynomial& a2 = data.hsop[1].poly;
    const Polynomial& a3 = data.hsop[2].poly;
    std::size_t samples = 0;
    while (samples < 200) {
        const std::uint32_t e = degree_dist(rng);
        Polynomial f(3, r.prime);
        for (std::uint32_t k = 0; k * p <= e; ++k)
            for (std::uint32_t j = 0; k * p + 2 * j <= e; ++j) {
                const std::uint32_t i = e - k * p - 2 * j;
                f += (a1.pow(i) * a2.pow(j) * a3.pow(k)).scaled(FpScalar{coeff_dist(rng)});
            }
        if (f.is_zero())
            continue;
        ++samples;
        ++rep.checked;
        const Term lt = lead_term(f, rep.order);
        if (lt.mono.exponent(0) % p != 0 || lt.mono.exponent(1) % 2 != 0)
            rep.failures.push_back("A-element of degree " + std::to_string(e) + " has lead term " + term_text(lt));
    }
}

} // namespace

LemmaReport lead_term_lemma_check(std::uint32_t p, Lemma lemma, MonomialOrder order, std::uint64_t seed)
{
    if (p > 7 || !is_prime(p))
        throw std::invalid_argument("lead_term_lemma_check: p must be a prime <= 7");
    if (lemma != Lemma::v2v2_lead && p == 2)
        throw std::invalid_argument("lead_term_lemma_check: V_3 lemmas need an odd prime");
    LemmaReport rep;
    rep.lemma = lemma;
    rep.p = p;
    rep.order = order;
    switch (lemma) {
    case Lemma::x1_power:
        check_v3_powers(rep, false);
        break;
    case Lemma::x1_power_x2:
        check_v3_powers(rep, true);
        break;
    case Lemma::v2v2_lead:
        check_v2v2(rep);
        break;
    case Lemma::obs:
        check_obs(rep, seed);
        break;
    }
    return rep;
}

} // namespace modcov
