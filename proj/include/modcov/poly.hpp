#pragma once

#include "modcov/arith.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modcov {

inline constexpr std::size_t kMaxVars = 4;

enum class MonomialOrder { graded_lex, graded_revlex };

std::string_view to_string(MonomialOrder order);

/// Exponent vector in at most four variables, with its degree cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars);
    Monomial(std::initializer_list<std::uint32_t> exponents);
    explicit Monomial(std::span<const std::uint32_t> exponents);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }
    std::uint32_t degree() const noexcept { return degree_; }

    /// Injective packing of the exponents (16 bits each).
    std::uint64_t key() const noexcept;
    static Monomial from_key(std::uint64_t key, std::size_t num_vars);

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const noexcept
    {
        return num_vars_ == other.num_vars_ && exps_ == other.exps_;
    }

private:
    std::array<std::uint16_t, kMaxVars> exps_{};
    std::uint8_t num_vars_ = 0;
    std::uint32_t degree_ = 0;
};

/// Degree first, ties broken lexicographically or reverse-lexicographically
/// with x1 > x2 > ... > xm. Throws on mismatched variable counts.
std::strong_ordering cmp(MonomialOrder order, const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    FpScalar coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p in m <= 4 variables. Terms are kept sorted
/// strictly descending in graded-revlex, with no zero coefficients.
class Polynomial {
public:
    Polynomial(std::size_t num_vars, const Prime& prime);

    static Polynomial constant(std::size_t num_vars, const Prime& prime, std::int64_t c);
    /// The coordinate function x_index, 1-based as in the text format.
    static Polynomial var(std::size_t num_vars, const Prime& prime, std::size_t index);
    static Polynomial monomial(const Monomial& m, const Prime& prime, std::int64_t c = 1);
    /// Combines duplicates and drops zeros.
    static Polynomial from_terms(std::size_t num_vars, const Prime& prime, std::vector<Term> terms);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const Prime& prime() const noexcept { return prime_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Largest total degree of a term; 0 for the zero polynomial.
    std::uint32_t total_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    /// Coefficient of m (zero if absent).
    FpScalar coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(FpScalar c) const;
    Polynomial pow(std::uint64_t e) const;

    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    bool operator==(const Polynomial& g) const noexcept
    {
        return num_vars_ == g.num_vars_ && prime_ == g.prime_ && terms_ == g.terms_;
    }

private:
    void require_compatible(const Polynomial& g) const;

    std::size_t num_vars_;
    Prime prime_;
    std::vector<Term> terms_;
};

/// Largest term of f under `order`. Throws std::domain_error for f = 0.
Term lead_term(const Polynomial& f, MonomialOrder order);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Text form `3*x1*x3^2 + x2 + 4`, terms in decreasing order; "0" for zero.
std::string format(const Polynomial& f, MonomialOrder order = MonomialOrder::graded_revlex);
std::string format(const Monomial& m);

/// Inverse of format. Whitespace is ignored; coefficients must lie in [0, p).
Polynomial parse(std::string_view text, std::size_t num_vars, const Prime& prime);

} // namespace modcov
