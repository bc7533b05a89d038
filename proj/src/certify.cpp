#include "modcov/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace modcov {

std::optional<std::uint32_t> degree_cap_from_env()
{
    const char* raw = std::getenv("MODCOV_MAX_DEGREE");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6)
        throw std::invalid_argument("MODCOV_MAX_DEGREE must be a nonnegative integer, got '" + text + "'");
    return static_cast<std::uint32_t>(std::stoul(text));
}

Certifier::Certifier(CaseData data, CertifyOptions options)
    : data_(std::move(data)), options_(options), engine_(data_.action)
{
}

GeneratedModule& Certifier::module(std::uint32_t n)
{
    auto& slot = modules_[n];
    if (!slot)
        slot = std::make_unique<GeneratedModule>(engine_, data_.hsop,
                                                 [this, n](std::uint32_t d) { return engine_.kernel(n, d); });
    return *slot;
}

std::uint32_t Certifier::canonical_top(std::uint32_t n)
{
    auto it = canonical_tops_.find(n);
    if (it != canonical_tops_.end())
        return it->second;
    const std::uint32_t top = max_degree(candidate_generators(CaseSpec{data_.spec.kind, data_.spec.p, n}));
    canonical_tops_.emplace(n, top);
    return top;
}

std::uint32_t Certifier::series_bound(std::uint32_t n)
{
    std::uint32_t max_hsop = 0;
    for (const auto& g : data_.hsop)
        max_hsop = std::max(max_hsop, g.degree);
    std::uint32_t bound = canonical_top(n) + max_hsop;
    if (options_.degree_cap)
        bound = std::min(bound, *options_.degree_cap);
    return bound;
}

TruncatedSeries Certifier::kernel_series(std::uint32_t n, std::uint32_t bound)
{
    TruncatedSeries s;
    for (std::uint32_t d = 0; d <= bound; ++d)
        s.coeffs.push_back(static_cast<std::int64_t>(engine_.kernel(n, d)->rank()));
    return s;
}

HilbertNumerator Certifier::kernel_numerator(std::uint32_t n, std::optional<std::uint32_t> bound)
{
    return numerator(kernel_series(n, bound.value_or(series_bound(n))), data_.hsop_degrees(), canonical_top(n));
}

TruncatedSeries Certifier::generated_series(const std::vector<Polynomial>& candidates, std::uint32_t bound)
{
    auto slices = std::make_shared<std::map<std::uint32_t, std::shared_ptr<const SubspaceSlice>>>();
    std::map<std::uint32_t, std::vector<Vec>> by_degree;
    for (const auto& f : candidates)
        if (!f.is_zero())
            by_degree[f.total_degree()].push_back(engine_.basis(f.total_degree())->coords(f));
    for (auto& [d, vecs] : by_degree)
        slices->emplace(d, std::make_shared<const SubspaceSlice>(
                               SubspaceSlice::span(d, engine_.basis(d)->dim(), engine_.modulus(), vecs)));
    GeneratedModule generated(engine_, data_.hsop, [this, slices](std::uint32_t d) {
        auto it = slices->find(d);
        if (it != slices->end())
            return it->second;
        return std::make_shared<const SubspaceSlice>(d, engine_.basis(d)->dim(), engine_.modulus());
    });
    TruncatedSeries s;
    for (std::uint32_t d = 0; d <= bound; ++d)
        s.coeffs.push_back(static_cast<std::int64_t>(generated.full(d)->rank()));
    return s;
}

FreetestRecord Certifier::freetest(std::uint32_t n, const std::vector<Polynomial>& candidates)
{
    FreetestRecord rec;
    rec.count = static_cast<std::int64_t>(candidates.size());
    for (const auto& f : candidates)
        rec.degree_sum += f.total_degree();
    try {
        const RankS rs = rank_s(kernel_numerator(n));
        rec.expected_r = rs.r;
        rec.expected_s = rs.s;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

namespace {

std::vector<std::string> texts(const std::vector<Polynomial>& polys)
{
    std::vector<std::string> out;
    for (const auto& f : polys)
        out.push_back(format(f));
    return out;
}

} // namespace

Certificate Certifier::certify(std::uint32_t n, const std::vector<Polynomial>& candidates)
{
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.spec = CaseSpec{data_.spec.kind, data_.spec.p, n};
    for (const auto& g : data_.hsop)
        cert.hsop.push_back(format(g.poly));
    cert.secondary = texts(data_.secondary);
    cert.candidates = texts(candidates);
    auto finish = [&](std::string reason) {
        cert.verdict = Verdict{reason.empty(), std::move(reason)};
        cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return cert;
    };

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Polynomial& f = candidates[i];
        if (f.is_zero() || !f.is_homogeneous())
            return finish("candidate " + std::to_string(i) + " (" + cert.candidates[i] +
                          ") is not a nonzero homogeneous polynomial");
        if (f.num_vars() != data_.action.num_vars() || !(f.prime() == data_.action.prime()))
            return finish("candidate " + std::to_string(i) + " lives in a different ring");
    }

    const std::uint32_t bound = std::max(max_degree(candidates), canonical_top(n));
    GeneratedModule& mod = module(n);
    std::string first_failure;
    bool independent = true;
    for (std::uint32_t d = 0; d <= bound; ++d) {
        auto basis = engine_.basis(d);
        auto kernel = engine_.kernel(n, d);
        auto positive = mod.positive(d);
        DegreeRecord rec;
        rec.d = d;
        rec.dim_Md = kernel->rank();
        rec.dim_AplusMd = positive->rank();
        SubspaceSlice residual = *positive;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates[i].total_degree() != d)
                continue;
            ++rec.candidates_at_d;
            Vec v = basis->coords(candidates[i]);
            if (!kernel->contains(v)) {
                cert.per_degree.push_back(rec);
                return finish("candidate " + std::to_string(i) + " (" + cert.candidates[i] + ") is not in K_" +
                              std::to_string(n));
            }
            if (residual.insert(std::move(v)))
                ++rec.residual_rank;
        }
        const bool spans = rec.candidates_at_d + rec.dim_AplusMd == rec.dim_Md;
        rec.ok = rec.residual_rank == rec.candidates_at_d && spans;
        if (rec.residual_rank != rec.candidates_at_d)
            independent = false;
        if (!rec.ok && first_failure.empty())
            first_failure = "degree " + std::to_string(d) + ": " + std::to_string(rec.candidates_at_d) +
                            " candidates, residual rank " + std::to_string(rec.residual_rank) +
                            ", dim M_d - dim (A_+M)_d = " + std::to_string(rec.dim_Md - rec.dim_AplusMd);
        cert.per_degree.push_back(rec);
    }

    cert.freetest = freetest(n, candidates);
    cert.freetest.independent = independent;
    if (!first_failure.empty())
        return finish(first_failure);
    if (!cert.freetest.error.empty())
        return finish("freetest: " + cert.freetest.error);
    if (!cert.freetest.matches())
        return finish("freetest: count " + std::to_string(cert.freetest.count) + " vs r = " +
                      std::to_string(cert.freetest.expected_r) + ", degree sum " +
                      std::to_string(cert.freetest.degree_sum) + " vs s = " +
                      std::to_string(cert.freetest.expected_s));
    return finish("");
}

Certificate nakayama_certify(const CaseData& data, const std::vector<Polynomial>& candidates, CertifyOptions options)
{
    Certifier c(data, options);
    return c.certify(data.spec.n, candidates);
}

FreetestRecord freetest_check(const CaseData& data, const std::vector<Polynomial>& candidates, CertifyOptions options)
{
    Certifier c(data, options);
    return c.freetest(data.spec.n, candidates);
}

Certificate secondary_certify(const CaseData& data, CertifyOptions options)
{
    Certifier c(data, options);
    return c.certify(1, data.secondary);
}

SubalgebraReport verify_ssubalg(const CaseData& data, CertifyOptions options)
{
    Certifier c(data, options);
    return check_subalgebra_identities(c.kernel_numerator(data.spec.n), c.kernel_numerator(1));
}

std::optional<std::uint32_t> soundness_mismatch(Certifier& certifier, std::uint32_t n,
                                                const std::vector<Polynomial>& candidates)
{
    const std::uint32_t bound = certifier.series_bound(n);
    const TruncatedSeries kernel = certifier.kernel_series(n, bound);
    const TruncatedSeries generated = certifier.generated_series(candidates, bound);
    for (std::uint32_t d = 0; d <= bound; ++d)
        if (kernel.coeffs[d] != generated.coeffs[d])
            return d;
    return std::nullopt;
}

std::vector<Polynomial> drop_candidate(const std::vector<Polynomial>& candidates, std::size_t index)
{
    if (index >= candidates.size())
        throw std::out_of_range("drop_candidate: index " + std::to_string(index) + " out of range");
    std::vector<Polynomial> out = candidates;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

std::vector<Polynomial> scale_candidate(const CaseData& data, const std::vector<Polynomial>& candidates,
                                        std::size_t index, std::size_t hsop_index)
{
    if (index >= candidates.size())
        throw std::out_of_range("scale_candidate: candidate index " + std::to_string(index) + " out of range");
    if (hsop_index >= data.hsop.size())
        throw std::out_of_range("scale_candidate: hsop index " + std::to_string(hsop_index) + " out of range");
    std::vector<Polynomial> out = candidates;
    out[index] = out[index] * data.hsop[hsop_index].poly;
    return out;
}

} // namespace modcov
