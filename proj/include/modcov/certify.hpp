#pragma once

#include "modcov/cases.hpp"
#include "modcov/hilbert.hpp"
#include "modcov/slices.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace modcov {

struct DegreeRecord {
    std::uint32_t d = 0;
    std::size_t dim_Md = 0;
    std::size_t dim_AplusMd = 0;
    std::size_t candidates_at_d = 0;
    /// Rank gained by the degree-d candidates modulo (A_+ M)_d.
    std::size_t residual_rank = 0;
    bool ok = false;
};

struct FreetestRecord {
    std::int64_t expected_r = 0;
    std::int64_t count = 0;
    std::int64_t expected_s = 0;
    std::int64_t degree_sum = 0;
    /// Independence as established by the per-degree checks.
    bool independent = false;
    /// Set when the kernel series could not be turned into (r, s).
    std::string error;

    bool matches() const { return error.empty() && count == expected_r && degree_sum == expected_s; }
};

struct Verdict {
    bool verified = false;
    std::string reason;
};

struct Certificate {
    CaseSpec spec;
    std::vector<std::string> hsop;
    std::vector<std::string> secondary;
    std::vector<std::string> candidates;
    std::vector<DegreeRecord> per_degree;
    FreetestRecord freetest;
    Verdict verdict;
    double elapsed_ms = 0;
};

struct CertifyOptions {
    /// Upper limit on truncation bounds; exceeding it is reported as a
    /// freetest error.
    std::optional<std::uint32_t> degree_cap;
};

/// Reads MODCOV_MAX_DEGREE; malformed values throw std::invalid_argument.
std::optional<std::uint32_t> degree_cap_from_env();

/// Shares slice caches between certifications of one case. `n` in the
/// methods below is the module power of K_n = ker(Delta^n).
class Certifier {
public:
    explicit Certifier(CaseData data, CertifyOptions options = {});

    const CaseData& data() const noexcept { return data_; }
    SliceEngine& engine() noexcept { return engine_; }

    /// The hsop algebra applied to K_n.
    GeneratedModule& module(std::uint32_t n);

    /// Per-degree Nakayama checks up to max(candidate degrees, canonical
    /// generator degrees), followed by the freetest count and degree sum.
    Certificate certify(std::uint32_t n, const std::vector<Polynomial>& candidates);

    FreetestRecord freetest(std::uint32_t n, const std::vector<Polynomial>& candidates);

    /// dim (K_n)_d for d <= bound.
    TruncatedSeries kernel_series(std::uint32_t n, std::uint32_t bound);
    /// Numerator of H(K_n, t) over the hsop degrees, from the series
    /// truncated at `bound` (series_bound(n) by default).
    HilbertNumerator kernel_numerator(std::uint32_t n, std::optional<std::uint32_t> bound = std::nullopt);
    /// Truncation bound used for K_n.
    std::uint32_t series_bound(std::uint32_t n);

    /// dim of the A-module generated by the candidates, degree by degree.
    TruncatedSeries generated_series(const std::vector<Polynomial>& candidates, std::uint32_t bound);

    /// Largest degree in the case's own generating set for K_n.
    std::uint32_t canonical_top(std::uint32_t n);

private:
    CaseData data_;
    CertifyOptions options_;
    SliceEngine engine_;
    std::map<std::uint32_t, std::unique_ptr<GeneratedModule>> modules_;
    std::map<std::uint32_t, std::uint32_t> canonical_tops_;
};

/// Certifies the candidates as free generators of K_n for n = case.spec.n.
Certificate nakayama_certify(const CaseData& data, const std::vector<Polynomial>& candidates,
                             CertifyOptions options = {});

FreetestRecord freetest_check(const CaseData& data, const std::vector<Polynomial>& candidates,
                              CertifyOptions options = {});

/// Certifies the secondary invariants as free generators of k[V]^G = K_1.
Certificate secondary_certify(const CaseData& data, CertifyOptions options = {});

/// (r, s) identities for K_n over the hsop algebra B through A = k[V]^G.
SubalgebraReport verify_ssubalg(const CaseData& data, CertifyOptions options = {});

/// Degree of the first disagreement between the candidate-generated
/// submodule and K_n up to the series bound, or nullopt if none.
std::optional<std::uint32_t> soundness_mismatch(Certifier& certifier, std::uint32_t n,
                                                const std::vector<Polynomial>& candidates);

/// Candidate set with entry `index` removed.
std::vector<Polynomial> drop_candidate(const std::vector<Polynomial>& candidates, std::size_t index);
/// Candidate set with entry `index` multiplied by hsop element `hsop_index`.
std::vector<Polynomial> scale_candidate(const CaseData& data, const std::vector<Polynomial>& candidates,
                                        std::size_t index, std::size_t hsop_index);

} // namespace modcov
