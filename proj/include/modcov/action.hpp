#pragma once

#include "modcov/poly.hpp"

#include <cstdint>
#include <vector>

namespace modcov {

/// A generator sigma of a cyclic p-group acting on k[V] by a unipotent
/// linear substitution of the variables.
class CyclicAction {
public:
    /// `sigma_images[i]` is sigma(x_{i+1}); each must be a linear form with
    /// sigma(x_i) - x_i in the span of x_{i+1}, ..., x_m, and sigma must have
    /// order exactly q = prime.q().
    CyclicAction(const Prime& prime, std::vector<Polynomial> sigma_images);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t num_vars() const noexcept { return images_.size(); }
    std::uint64_t group_order() const noexcept { return prime_.q(); }
    const std::vector<Polynomial>& sigma_images() const noexcept { return images_; }

    /// Row i holds the coefficients of sigma^power(x_{i+1}). Negative powers
    /// are reduced mod q.
    std::vector<std::vector<std::uint32_t>> power_matrix(std::int64_t power) const;

private:
    Prime prime_;
    std::vector<Polynomial> images_;
    std::vector<std::vector<std::uint32_t>> matrix_;
};

/// The subgroup generated by sigma^(p^index_exponent); its index in G is p^index_exponent.
struct Subgroup {
    std::uint32_t index_exponent = 0;
};

/// Substitutes x_i -> sigma^power(x_i).
Polynomial act(const CyclicAction& a, std::int64_t power, const Polynomial& f);

/// (sigma - 1)^n (f), by n successive first differences.
Polynomial delta_pow(const CyclicAction& a, std::uint64_t n, const Polynomial& f);

inline Polynomial delta(const CyclicAction& a, const Polynomial& f)
{
    return delta_pow(a, 1, f);
}

inline bool is_invariant(const CyclicAction& a, const Polynomial& f)
{
    return delta(a, f).is_zero();
}

/// Least i > 0 with Delta^i(f) = 0. Throws std::domain_error for f = 0.
std::uint64_t weight(const CyclicAction& a, const Polynomial& f);

/// [G : H], validating H against the group.
std::uint64_t subgroup_index(const CyclicAction& a, Subgroup h);

bool is_invariant_under(const CyclicAction& a, Subgroup h, const Polynomial& f);

/// Relative transfer Tr^G_H(f) = sum of sigma^i f, 0 <= i < [G:H].
/// Throws std::domain_error unless f is H-invariant.
Polynomial transfer(const CyclicAction& a, Subgroup h, const Polynomial& f);

/// Relative norm N^G_H(f) = product of sigma^i f, 0 <= i < [G:H].
Polynomial norm(const CyclicAction& a, Subgroup h, const Polynomial& f);

/// N^G(f), the norm over the trivial subgroup.
Polynomial full_norm(const CyclicAction& a, const Polynomial& f);

} // namespace modcov
