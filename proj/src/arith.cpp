#include "modcov/arith.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

namespace modcov {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1)
{
    if (p < 2 || p > kMaxP || !is_prime(p))
        throw std::invalid_argument("Prime: p = " + std::to_string(p) + " is not a prime in [2, 97]");
    if (k < 1)
        throw std::invalid_argument("Prime: exponent k must be positive");
    for (std::uint32_t i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > kMaxQ)
            throw std::invalid_argument("Prime: group order p^k exceeds 2^20");
    }
}

std::uint64_t Prime::power(std::uint32_t e) const
{
    if (e > k_)
        throw std::invalid_argument("Prime::power: exponent exceeds k");
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i)
        r *= p_;
    return r;
}

std::ostream& operator<<(std::ostream& os, FpScalar a)
{
    return os << a.value;
}

FpScalar ff_pow(FpScalar a, std::uint64_t e, std::uint32_t p) noexcept
{
    FpScalar r{1 % p};
    while (e > 0) {
        if (e & 1)
            r = ff_mul(r, a, p);
        a = ff_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

FpScalar ff_inv(FpScalar a, std::uint32_t p)
{
    if (a.value % p == 0)
        throw std::domain_error("ff_inv: zero has no inverse mod " + std::to_string(p));
    // extended Euclid on (a, p)
    std::int64_t r0 = p, r1 = a.value, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t qt = r0 / r1;
        std::int64_t r2 = r0 - qt * r1;
        std::int64_t t2 = t0 - qt * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return FpScalar::from_int(t0, p);
}

FpScalar ff_inv(FpScalar a, const Prime& p)
{
    return ff_inv(a, p.p());
}

namespace {

constexpr std::uint64_t kPascalRows = 2048;

// Pascal triangles mod p, grown on demand. Rows are stored in full.
class PascalCache {
public:
    FpScalar get(std::uint64_t n, std::uint64_t k, std::uint32_t p)
    {
        std::lock_guard lock(mu_);
        auto& rows = tables_[p];
        if (rows.empty())
            rows.push_back({1});
        while (rows.size() <= n) {
            const auto& prev = rows.back();
            std::vector<std::uint8_t> next(prev.size() + 1);
            next.front() = 1;
            next.back() = 1;
            for (std::size_t i = 1; i < prev.size(); ++i) {
                std::uint32_t s = std::uint32_t{prev[i - 1]} + prev[i];
                next[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
            }
            rows.push_back(std::move(next));
        }
        return FpScalar{rows[n][k]};
    }

private:
    std::mutex mu_;
    std::map<std::uint32_t, std::vector<std::vector<std::uint8_t>>> tables_;
};

PascalCache& pascal_cache()
{
    static PascalCache cache;
    return cache;
}

} // namespace

FpScalar binom_mod(std::uint64_t n, std::uint64_t k, const Prime& prime)
{
    const std::uint32_t p = prime.p();
    if (k > n)
        return FpScalar{0};
    if (n < kPascalRows)
        return pascal_cache().get(n, k, p);
    // Large rows: digitwise product (Lucas), each digit factor from the table.
    FpScalar r{1};
    while (n > 0 || k > 0) {
        std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd)
            return FpScalar{0};
        r = ff_mul(r, pascal_cache().get(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    return r;
}

FpScalar falling_factorial_mod(std::uint64_t n, std::uint64_t j, std::uint32_t p) noexcept
{
    if (j > n)
        return FpScalar{0};
    FpScalar r{1 % p};
    for (std::uint64_t i = 0; i < j; ++i)
        r = ff_mul(r, FpScalar{static_cast<std::uint32_t>((n - i) % p)}, p);
    return r;
}

} // namespace modcov
