#include "modcov/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace modcov {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Hilbert series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Hilbert series coefficient overflow");
    return r;
}

} // namespace

std::int64_t HilbertNumerator::at_one() const
{
    std::int64_t s = 0;
    for (auto c : coeffs)
        s = checked_add(s, c);
    return s;
}

std::int64_t HilbertNumerator::derivative_at_one() const
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s = checked_add(s, checked_mul(static_cast<std::int64_t>(i), coeffs[i]));
    return s;
}

std::string HilbertNumerator::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::int64_t c = coeffs[i];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        std::int64_t a = c < 0 ? -c : c;
        if (i == 0)
            os << a;
        else {
            if (a != 1)
                os << a << "*";
            os << "t";
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

TruncatedSeries hsop_series(const std::vector<std::uint32_t>& degrees, std::size_t bound)
{
    TruncatedSeries s;
    s.coeffs.assign(bound + 1, 0);
    s.coeffs[0] = 1;
    for (auto d : degrees) {
        if (d == 0)
            throw std::invalid_argument("hsop_series: generator degrees must be positive");
        for (std::size_t i = d; i <= bound; ++i)
            s.coeffs[i] = checked_add(s.coeffs[i], s.coeffs[i - d]);
    }
    return s;
}

HilbertNumerator numerator(const TruncatedSeries& module_series, const std::vector<std::uint32_t>& degrees,
                           std::size_t expected_top)
{
    const std::size_t bound = module_series.bound();
    std::uint32_t max_degree = 0;
    for (auto d : degrees) {
        if (d == 0)
            throw std::invalid_argument("numerator: generator degrees must be positive");
        max_degree = std::max(max_degree, d);
    }
    if (module_series.coeffs.empty() || bound < expected_top + max_degree)
        throw std::invalid_argument("numerator: truncation bound " + std::to_string(bound) +
                                    " is below expected_top + max degree = " +
                                    std::to_string(expected_top + max_degree));
    std::vector<std::int64_t> f = module_series.coeffs;
    for (auto d : degrees)
        for (std::size_t i = bound; i >= d; --i)
            f[i] = checked_add(f[i], -f[i - d]);
    std::vector<std::size_t> offending;
    for (std::size_t i = expected_top + 1; i <= bound; ++i)
        if (f[i] != 0)
            offending.push_back(i);
    if (!offending.empty()) {
        std::string list;
        for (auto i : offending)
            list += (list.empty() ? "" : ", ") + std::to_string(i);
        throw NotPolynomialError("numerator: not polynomial up to bound " + std::to_string(bound) +
                                     "; nonzero coefficients in degrees " + list,
                                 std::move(offending));
    }
    f.resize(expected_top + 1);
    while (f.size() > 1 && f.back() == 0)
        f.pop_back();
    return HilbertNumerator{std::move(f), degrees};
}

RankS rank_s(const HilbertNumerator& f)
{
    return rank_s(f, HilbertNumerator{{1}, f.hsop_degrees});
}

RankS rank_s(const HilbertNumerator& f, const HilbertNumerator& g)
{
    const std::int64_t f1 = f.at_one(), fd = f.derivative_at_one();
    const std::int64_t g1 = g.at_one(), gd = g.derivative_at_one();
    if (g1 == 0)
        throw std::domain_error("rank_s: g(1) = 0");
    if (f1 % g1 != 0)
        throw std::domain_error("rank_s: r = " + std::to_string(f1) + "/" + std::to_string(g1) + " is not an integer");
    const std::int64_t num = checked_add(checked_mul(fd, g1), -checked_mul(f1, gd));
    const std::int64_t den = checked_mul(g1, g1);
    if (num % den != 0)
        throw std::domain_error("rank_s: s = " + std::to_string(num) + "/" + std::to_string(den) +
                                " is not an integer");
    RankS out{f1 / g1, num / den};
    if (out.r < 0 || out.s < 0)
        throw std::domain_error("rank_s: negative rank or s-invariant");
    return out;
}

SubalgebraReport check_subalgebra_identities(const HilbertNumerator& module_numerator,
                                             const HilbertNumerator& algebra_numerator)
{
    SubalgebraReport rep;
    rep.module_over_b = rank_s(module_numerator);
    rep.algebra_over_b = rank_s(algebra_numerator);
    rep.module_over_a = rank_s(module_numerator, algebra_numerator);
    rep.rank_identity = rep.module_over_b.r == rep.module_over_a.r * rep.algebra_over_b.r;
    rep.s_identity = rep.module_over_b.s ==
                     rep.module_over_a.r * rep.algebra_over_b.s + rep.algebra_over_b.r * rep.module_over_a.s;
    return rep;
}

std::string SubalgebraReport::to_string() const
{
    std::ostringstream os;
    os << "r(M,B)=" << module_over_b.r << " s(M,B)=" << module_over_b.s << " r(A,B)=" << algebra_over_b.r
       << " s(A,B)=" << algebra_over_b.s << " r(M,A)=" << module_over_a.r << " s(M,A)=" << module_over_a.s;
    return os.str();
}

} // namespace modcov
