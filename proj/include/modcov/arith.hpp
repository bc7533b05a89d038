#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace modcov {

/// Characteristic p together with the cyclic group order q = p^k.
class Prime {
public:
    static constexpr std::uint32_t kMaxP = 97;
    static constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 20;

    explicit Prime(std::uint32_t p, std::uint32_t k = 1);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint64_t q() const noexcept { return q_; }

    /// p^e, for 0 <= e <= k.
    std::uint64_t power(std::uint32_t e) const;

    bool operator==(const Prime&) const = default;

private:
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Residue in [0, p). The modulus travels separately.
struct FpScalar {
    std::uint32_t value = 0;

    static FpScalar from_int(std::int64_t x, std::uint32_t p) noexcept
    {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        if (r < 0)
            r += p;
        return FpScalar{static_cast<std::uint32_t>(r)};
    }

    bool is_zero() const noexcept { return value == 0; }
    auto operator<=>(const FpScalar&) const = default;
};

std::ostream& operator<<(std::ostream& os, FpScalar a);

inline FpScalar ff_add(FpScalar a, FpScalar b, std::uint32_t p) noexcept
{
    std::uint32_t s = a.value + b.value;
    return FpScalar{s >= p ? s - p : s};
}

inline FpScalar ff_sub(FpScalar a, FpScalar b, std::uint32_t p) noexcept
{
    return FpScalar{a.value >= b.value ? a.value - b.value : a.value + p - b.value};
}

inline FpScalar ff_neg(FpScalar a, std::uint32_t p) noexcept
{
    return FpScalar{a.value == 0 ? 0 : p - a.value};
}

inline FpScalar ff_mul(FpScalar a, FpScalar b, std::uint32_t p) noexcept
{
    return FpScalar{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p)};
}

FpScalar ff_pow(FpScalar a, std::uint64_t e, std::uint32_t p) noexcept;

/// Multiplicative inverse. Throws std::domain_error for a = 0.
FpScalar ff_inv(FpScalar a, const Prime& p);
FpScalar ff_inv(FpScalar a, std::uint32_t p);

/// C(n, k) mod p from Pascal's triangle; 0 when k > n.
FpScalar binom_mod(std::uint64_t n, std::uint64_t k, const Prime& p);

/// n! / (n-j)! mod p (falling factorial), used by lead-term formulas.
FpScalar falling_factorial_mod(std::uint64_t n, std::uint64_t j, std::uint32_t p) noexcept;

} // namespace modcov
