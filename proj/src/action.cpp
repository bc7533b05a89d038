#include "modcov/action.hpp"

#include <string>

namespace modcov {

namespace {

using Mat = std::vector<std::vector<std::uint32_t>>;

Mat identity(std::size_t m)
{
    Mat id(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        id[i][i] = 1;
    return id;
}

Mat multiply(const Mat& a, const Mat& b, std::uint32_t p)
{
    const std::size_t m = a.size();
    Mat c(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t s = 0;
            for (std::size_t l = 0; l < m; ++l)
                s += std::uint64_t{a[i][l]} * b[l][j];
            c[i][j] = static_cast<std::uint32_t>(s % p);
        }
    return c;
}

Mat matrix_power(Mat base, std::uint64_t e, std::uint32_t p)
{
    Mat r = identity(base.size());
    while (e > 0) {
        if (e & 1)
            r = multiply(r, base, p);
        e >>= 1;
        if (e > 0)
            base = multiply(base, base, p);
    }
    return r;
}

} // namespace

CyclicAction::CyclicAction(const Prime& prime, std::vector<Polynomial> sigma_images)
    : prime_(prime), images_(std::move(sigma_images))
{
    const std::size_t m = images_.size();
    if (m < 1 || m > kMaxVars)
        throw std::invalid_argument("CyclicAction: need between 1 and 4 variables");
    matrix_.assign(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& img = images_[i];
        if (img.num_vars() != m || !(img.prime() == prime))
            throw std::invalid_argument("CyclicAction: image ring does not match");
        for (const auto& t : img.terms()) {
            if (t.mono.degree() != 1)
                throw std::invalid_argument("CyclicAction: sigma(x" + std::to_string(i + 1) + ") is not a linear form");
            for (std::size_t j = 0; j < m; ++j)
                if (t.mono.exponent(j) == 1)
                    matrix_[i][j] = t.coeff.value;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (matrix_[i][j] != 0)
                throw std::invalid_argument("CyclicAction: sigma is not upper unitriangular");
        if (matrix_[i][i] != 1)
            throw std::invalid_argument("CyclicAction: sigma is not unipotent");
    }
    const std::uint32_t p = prime_.p();
    if (matrix_power(matrix_, prime_.q(), p) != identity(m))
        throw std::invalid_argument("CyclicAction: sigma^q is not the identity");
    if (matrix_power(matrix_, prime_.q() / p, p) == identity(m))
        throw std::invalid_argument("CyclicAction: action is not faithful");
}

std::vector<std::vector<std::uint32_t>> CyclicAction::power_matrix(std::int64_t power) const
{
    const auto q = static_cast<std::int64_t>(prime_.q());
    std::int64_t e = power % q;
    if (e < 0)
        e += q;
    return matrix_power(matrix_, static_cast<std::uint64_t>(e), prime_.p());
}

Polynomial act(const CyclicAction& a, std::int64_t power, const Polynomial& f)
{
    const std::size_t m = a.num_vars();
    if (f.num_vars() != m || !(f.prime() == a.prime()))
        throw std::invalid_argument("act: polynomial ring does not match the action");
    const auto q = static_cast<std::int64_t>(a.group_order());
    if (power % q == 0 || f.is_zero())
        return f;
    const auto mat = a.power_matrix(power);
    const Prime& prime = a.prime();

    std::vector<Polynomial> images;
    images.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial li(m, prime);
        for (std::size_t j = 0; j < m; ++j)
            if (mat[i][j] != 0)
                li += Polynomial::var(m, prime, j + 1).scaled(FpScalar{mat[i][j]});
        images.push_back(std::move(li));
    }
    // powers[i][e] = images[i]^e, grown on demand
    std::vector<std::vector<Polynomial>> powers(m);
    for (std::size_t i = 0; i < m; ++i)
        powers[i].push_back(Polynomial::constant(m, prime, 1));
    auto image_power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        while (powers[i].size() <= e)
            powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][e];
    };

    Polynomial out(m, prime);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(m, prime, t.coeff.value);
        for (std::size_t i = 0; i < m; ++i)
            if (t.mono.exponent(i) > 0)
                prod *= image_power(i, t.mono.exponent(i));
        out += prod;
    }
    return out;
}

Polynomial delta_pow(const CyclicAction& a, std::uint64_t n, const Polynomial& f)
{
    Polynomial g = f;
    for (std::uint64_t i = 0; i < n && !g.is_zero(); ++i)
        g = act(a, 1, g) - g;
    return g;
}

std::uint64_t weight(const CyclicAction& a, const Polynomial& f)
{
    if (f.is_zero())
        throw std::domain_error("weight: the zero polynomial has no weight");
    Polynomial g = f;
    for (std::uint64_t i = 1; i <= a.group_order(); ++i) {
        g = act(a, 1, g) - g;
        if (g.is_zero())
            return i;
    }
    throw std::logic_error("weight: Delta^q did not vanish");
}

std::uint64_t subgroup_index(const CyclicAction& a, Subgroup h)
{
    return a.prime().power(h.index_exponent);
}

bool is_invariant_under(const CyclicAction& a, Subgroup h, const Polynomial& f)
{
    return act(a, static_cast<std::int64_t>(subgroup_index(a, h)), f) == f;
}

namespace {

void require_h_invariant(const CyclicAction& a, Subgroup h, const Polynomial& f, const char* who)
{
    if (!is_invariant_under(a, h, f))
        throw std::domain_error(std::string(who) + ": argument is not invariant under the subgroup");
}

} // namespace

Polynomial transfer(const CyclicAction& a, Subgroup h, const Polynomial& f)
{
    require_h_invariant(a, h, f, "transfer");
    const std::uint64_t index = subgroup_index(a, h);
    Polynomial sum(f.num_vars(), f.prime());
    for (std::uint64_t i = 0; i < index; ++i)
        sum += act(a, static_cast<std::int64_t>(i), f);
    return sum;
}

Polynomial norm(const CyclicAction& a, Subgroup h, const Polynomial& f)
{
    require_h_invariant(a, h, f, "norm");
    const std::uint64_t index = subgroup_index(a, h);
    Polynomial prod = Polynomial::constant(f.num_vars(), f.prime(), 1);
    for (std::uint64_t i = 0; i < index; ++i)
        prod *= act(a, static_cast<std::int64_t>(i), f);
    return prod;
}

Polynomial full_norm(const CyclicAction& a, const Polynomial& f)
{
    return norm(a, Subgroup{a.prime().k()}, f);
}

} // namespace modcov
