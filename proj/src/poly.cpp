#include "modcov/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

namespace modcov {

std::string_view to_string(MonomialOrder order)
{
    return order == MonomialOrder::graded_lex ? "graded-lex" : "graded-revlex";
}

Monomial::Monomial(std::size_t num_vars) : num_vars_(static_cast<std::uint8_t>(num_vars))
{
    if (num_vars == 0 || num_vars > kMaxVars)
        throw std::invalid_argument("Monomial: number of variables must be in [1, 4]");
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size()))
{
}

Monomial::Monomial(std::span<const std::uint32_t> exponents) : Monomial(exponents.size())
{
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > std::numeric_limits<std::uint16_t>::max())
            throw std::overflow_error("Monomial: exponent exceeds 65535");
        exps_[i] = static_cast<std::uint16_t>(exponents[i]);
        degree_ += exponents[i];
    }
}

std::uint64_t Monomial::key() const noexcept
{
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        k = (k << 16) | exps_[i];
    return k;
}

Monomial Monomial::from_key(std::uint64_t key, std::size_t num_vars)
{
    std::array<std::uint32_t, kMaxVars> e{};
    for (std::size_t i = kMaxVars; i-- > 0;) {
        e[i] = static_cast<std::uint32_t>(key & 0xffff);
        key >>= 16;
    }
    return Monomial(std::span<const std::uint32_t>(e.data(), num_vars));
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < num_vars_; ++i) {
        std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
        if (e > std::numeric_limits<std::uint16_t>::max())
            throw std::overflow_error("Monomial: exponent exceeds 65535");
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

std::strong_ordering cmp(MonomialOrder order, const Monomial& a, const Monomial& b)
{
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("cmp: monomials have different numbers of variables");
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    const std::size_t m = a.num_vars();
    if (order == MonomialOrder::graded_lex) {
        for (std::size_t i = 0; i < m; ++i)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) <=> b.exponent(i);
    } else {
        // smaller exponent in the last differing variable wins
        for (std::size_t i = m; i-- > 0;)
            if (a.exponent(i) != b.exponent(i))
                return b.exponent(i) <=> a.exponent(i);
    }
    return std::strong_ordering::equal;
}

namespace {

bool revlex_greater(const Term& a, const Term& b)
{
    return cmp(MonomialOrder::graded_revlex, a.mono, b.mono) == std::strong_ordering::greater;
}

using Accumulator = std::unordered_map<std::uint64_t, std::uint32_t>;

std::vector<Term> drain(const Accumulator& acc, std::size_t num_vars)
{
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [key, c] : acc)
        if (c != 0)
            out.push_back(Term{Monomial::from_key(key, num_vars), FpScalar{c}});
    std::sort(out.begin(), out.end(), revlex_greater);
    return out;
}

} // namespace

Polynomial::Polynomial(std::size_t num_vars, const Prime& prime) : num_vars_(num_vars), prime_(prime)
{
    if (num_vars == 0 || num_vars > kMaxVars)
        throw std::invalid_argument("Polynomial: number of variables must be in [1, 4]");
}

Polynomial Polynomial::constant(std::size_t num_vars, const Prime& prime, std::int64_t c)
{
    Polynomial f(num_vars, prime);
    FpScalar v = FpScalar::from_int(c, prime.p());
    if (!v.is_zero())
        f.terms_.push_back(Term{Monomial(num_vars), v});
    return f;
}

Polynomial Polynomial::var(std::size_t num_vars, const Prime& prime, std::size_t index)
{
    if (index < 1 || index > num_vars)
        throw std::invalid_argument("Polynomial::var: index " + std::to_string(index) + " out of range");
    std::array<std::uint32_t, kMaxVars> e{};
    e[index - 1] = 1;
    return monomial(Monomial(std::span<const std::uint32_t>(e.data(), num_vars)), prime);
}

Polynomial Polynomial::monomial(const Monomial& m, const Prime& prime, std::int64_t c)
{
    Polynomial f(m.num_vars(), prime);
    FpScalar v = FpScalar::from_int(c, prime.p());
    if (!v.is_zero())
        f.terms_.push_back(Term{m, v});
    return f;
}

Polynomial Polynomial::from_terms(std::size_t num_vars, const Prime& prime, std::vector<Term> terms)
{
    Polynomial f(num_vars, prime);
    const std::uint32_t p = prime.p();
    Accumulator acc;
    for (const auto& t : terms) {
        if (t.mono.num_vars() != num_vars)
            throw std::invalid_argument("Polynomial::from_terms: variable count mismatch");
        auto& slot = acc[t.mono.key()];
        slot = ff_add(FpScalar{slot}, FpScalar{t.coeff.value % p}, p).value;
    }
    f.terms_ = drain(acc, num_vars);
    return f;
}

std::uint32_t Polynomial::total_degree() const noexcept
{
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

FpScalar Polynomial::coefficient(const Monomial& m) const
{
    for (const auto& t : terms_)
        if (t.mono == m)
            return t.coeff;
    return FpScalar{0};
}

void Polynomial::require_compatible(const Polynomial& g) const
{
    if (num_vars_ != g.num_vars_ || !(prime_ == g.prime_))
        throw std::invalid_argument("Polynomial: mismatched ring parameters");
}

Polynomial Polynomial::operator+(const Polynomial& g) const
{
    require_compatible(g);
    const std::uint32_t p = prime_.p();
    Polynomial r(num_vars_, prime_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin(), b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end() || (a != terms_.end() && revlex_greater(*a, *b))) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || revlex_greater(*b, *a)) {
            r.terms_.push_back(*b++);
        } else {
            FpScalar c = ff_add(a->coeff, b->coeff, p);
            if (!c.is_zero())
                r.terms_.push_back(Term{a->mono, c});
            ++a;
            ++b;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coeff = ff_neg(t.coeff, prime_.p());
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const
{
    return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const
{
    require_compatible(g);
    Polynomial r(num_vars_, prime_);
    if (is_zero() || g.is_zero())
        return r;
    const std::uint32_t p = prime_.p();
    Accumulator acc;
    acc.reserve(terms_.size() * g.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : g.terms_) {
            auto& slot = acc[(s.mono * t.mono).key()];
            slot = static_cast<std::uint32_t>((slot + std::uint64_t{s.coeff.value} * t.coeff.value) % p);
        }
    r.terms_ = drain(acc, num_vars_);
    return r;
}

Polynomial Polynomial::scaled(FpScalar c) const
{
    Polynomial r(num_vars_, prime_);
    if (c.value % prime_.p() == 0)
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.coeff = ff_mul(t.coeff, c, prime_.p());
    return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const
{
    Polynomial result = constant(num_vars_, prime_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

Term lead_term(const Polynomial& f, MonomialOrder order)
{
    if (f.is_zero())
        throw std::domain_error("lead_term: zero polynomial has no lead term");
    const auto terms = f.terms();
    if (order == MonomialOrder::graded_revlex)
        return terms.front();
    return *std::max_element(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return cmp(order, a.mono, b.mono) == std::strong_ordering::less;
    });
}

std::string format(const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m.exponent(i) == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m.exponent(i) > 1)
            out += '^' + std::to_string(m.exponent(i));
    }
    return out.empty() ? "1" : out;
}

std::string format(const Polynomial& f, MonomialOrder order)
{
    if (f.is_zero())
        return "0";
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    if (order != MonomialOrder::graded_revlex)
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return cmp(order, a.mono, b.mono) == std::strong_ordering::greater;
        });
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty())
            out += " + ";
        if (t.mono.degree() == 0) {
            out += std::to_string(t.coeff.value);
            continue;
        }
        if (t.coeff.value != 1)
            out += std::to_string(t.coeff.value) + '*';
        out += format(t.mono);
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t num_vars, const Prime& prime)
        : num_vars_(num_vars), prime_(prime)
    {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                chars_.push_back(text[i]);
                positions_.push_back(i);
            }
        end_position_ = text.size();
    }

    Polynomial run()
    {
        std::vector<Term> terms;
        terms.push_back(term());
        while (peek() == '+') {
            ++pos_;
            terms.push_back(term());
        }
        if (pos_ != chars_.size())
            fail("unexpected character '" + std::string(1, chars_[pos_]) + "'");
        return Polynomial::from_terms(num_vars_, prime_, std::move(terms));
    }

private:
    char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

    std::size_t where() const { return pos_ < positions_.size() ? positions_[pos_] : end_position_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("parse: " + msg, where()); }

    std::uint64_t number()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(chars_[pos_++] - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                fail("number too large");
        }
        return v;
    }

    Term term()
    {
        std::array<std::uint32_t, kMaxVars> exps{};
        std::uint32_t coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t at = where();
            std::uint64_t c = number();
            if (c >= prime_.p())
                throw ParseError("parse: coefficient " + std::to_string(c) + " not in [0, p)", at);
            coeff = static_cast<std::uint32_t>(c);
            if (peek() != '*')
                return make(exps, coeff);
            ++pos_;
        }
        varpow(exps);
        while (peek() == '*') {
            ++pos_;
            varpow(exps);
        }
        return make(exps, coeff);
    }

    void varpow(std::array<std::uint32_t, kMaxVars>& exps)
    {
        if (peek() != 'x')
            fail("expected a variable");
        ++pos_;
        std::size_t at = where();
        std::uint64_t index = number();
        if (index < 1 || index > num_vars_)
            throw ParseError("parse: unknown variable x" + std::to_string(index), at);
        std::uint64_t e = 1;
        if (peek() == '^') {
            ++pos_;
            e = number();
        }
        exps[index - 1] += static_cast<std::uint32_t>(e);
    }

    Term make(const std::array<std::uint32_t, kMaxVars>& exps, std::uint32_t coeff) const
    {
        return Term{Monomial(std::span<const std::uint32_t>(exps.data(), num_vars_)), FpScalar{coeff}};
    }

    std::size_t num_vars_;
    Prime prime_;
    std::vector<char> chars_;
    std::vector<std::size_t> positions_;
    std::size_t end_position_ = 0;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse(std::string_view text, std::size_t num_vars, const Prime& prime)
{
    return Parser(text, num_vars, prime).run();
}

} // namespace modcov
