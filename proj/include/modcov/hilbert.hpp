#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcov {

/// Coefficients dim(M_d) for 0 <= d <= bound().
struct TruncatedSeries {
    std::vector<std::int64_t> coeffs;

    std::size_t bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// f(t) with H(M, t) = f(t) / prod (1 - t^{d_i}).
struct HilbertNumerator {
    std::vector<std::int64_t> coeffs;
    std::vector<std::uint32_t> hsop_degrees;

    std::int64_t at_one() const;
    std::int64_t derivative_at_one() const;
    std::string to_string() const;
};

/// Rank r(M, A) and s-invariant s(M, A).
struct RankS {
    std::int64_t r = 0;
    std::int64_t s = 0;

    bool operator==(const RankS&) const = default;
};

/// Raised when the truncated numerator has nonzero coefficients past the
/// expected top degree.
class NotPolynomialError : public std::runtime_error {
public:
    NotPolynomialError(const std::string& what, std::vector<std::size_t> degrees)
        : std::runtime_error(what), degrees_(std::move(degrees))
    {
    }
    const std::vector<std::size_t>& offending_degrees() const noexcept { return degrees_; }

private:
    std::vector<std::size_t> degrees_;
};

/// Coefficients of prod 1/(1 - t^{d_i}) up to t^bound.
TruncatedSeries hsop_series(const std::vector<std::uint32_t>& degrees, std::size_t bound);

/// Multiplies the series by prod (1 - t^{d_i}) and checks that the result
/// vanishes on (expected_top, bound]. Requires bound >= expected_top + max d_i.
HilbertNumerator numerator(const TruncatedSeries& module_series, const std::vector<std::uint32_t>& degrees,
                           std::size_t expected_top);

/// r = f(1)/g(1), s = (f'(1) g(1) - f(1) g'(1)) / g(1)^2, where g is the
/// numerator of an intermediate algebra (the constant 1 by default). Both
/// must be nonnegative integers.
RankS rank_s(const HilbertNumerator& f);
RankS rank_s(const HilbertNumerator& f, const HilbertNumerator& g);

/// Both sides of r(M,B) = r(M,A) r(A,B) and
/// s(M,B) = r(M,A) s(A,B) + r(A,B) s(M,A).
struct SubalgebraReport {
    RankS module_over_b;    // (r(M,B), s(M,B))
    RankS algebra_over_b;   // (r(A,B), s(A,B))
    RankS module_over_a;    // (r(M,A), s(M,A))
    bool rank_identity = false;
    bool s_identity = false;

    bool ok() const { return rank_identity && s_identity; }
    std::string to_string() const;
};

SubalgebraReport check_subalgebra_identities(const HilbertNumerator& module_numerator,
                                             const HilbertNumerator& algebra_numerator);

} // namespace modcov
