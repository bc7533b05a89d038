#include "modcov/slices.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace modcov {

namespace {

// v[j] -= f * r[j] for j >= from.
void sub_scaled(std::span<Residue> v, Residue f, std::span<const Residue> r, std::size_t from, std::uint32_t p)
{
    std::array<Residue, Prime::kMaxP> table{};
    const Residue nf = p - f;
    for (std::uint32_t x = 0; x < p; ++x)
        table[x] = static_cast<Residue>(std::uint64_t{nf} * x % p);
    for (std::size_t j = from; j < v.size(); ++j) {
        if (r[j] == 0)
            continue;
        Residue s = v[j] + table[r[j]];
        v[j] = s >= p ? s - p : s;
    }
}

void scale(std::span<Residue> v, Residue f, std::size_t from, std::uint32_t p)
{
    for (std::size_t j = from; j < v.size(); ++j)
        v[j] = static_cast<Residue>(std::uint64_t{v[j]} * f % p);
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& a)
{
    const std::uint32_t p = a.modulus();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a.at(sel, c) == 0)
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != r)
            std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
        scale(a.row(r), ff_inv(FpScalar{a.at(r, c)}, p).value, c, p);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.at(i, c) != 0)
                sub_scaled(a.row(i), a.at(i, c), a.row(r), c, p);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// rows * b for a dense square b.
Matrix multiply(const Matrix& a, const Matrix& b)
{
    const std::uint32_t p = a.modulus();
    Matrix c(a.rows(), b.cols(), p);
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const std::uint64_t f = a.at(i, l);
            if (f == 0)
                continue;
            auto brow = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j)
                acc[j] += f * brow[j];
            // keep the accumulator well below overflow
            if ((l & 0xfff) == 0xfff)
                for (auto& x : acc)
                    x %= p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j)
            c.at(i, j) = static_cast<Residue>(acc[j] % p);
    }
    return c;
}

Matrix dense_delta(const SparseRows& sigma, std::span<const std::size_t> block, std::uint32_t p)
{
    std::vector<std::size_t> local(block.empty() ? 0 : block.back() + 1, 0);
    for (std::size_t i = 0; i < block.size(); ++i)
        local[block[i]] = i;
    Matrix d(block.size(), block.size(), p);
    for (std::size_t i = 0; i < block.size(); ++i) {
        for (const auto& [col, val] : sigma[block[i]])
            d.at(i, local.at(col)) = val;
        d.at(i, i) = ff_sub(FpScalar{d.at(i, i)}, FpScalar{1}, p).value;
    }
    return d;
}

Matrix matrix_power(const Matrix& base, std::uint64_t n)
{
    Matrix r = Matrix::identity(base.rows(), base.modulus());
    for (std::uint64_t i = 0; i < n && !r.is_zero(); ++i)
        r = multiply(r, base);
    return r;
}

std::vector<Monomial> enumerate_monomials(std::size_t m, std::uint32_t d)
{
    std::vector<Monomial> out;
    std::array<std::uint32_t, kMaxVars> e{};
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == m) {
            e[i] = left;
            out.emplace_back(std::span<const std::uint32_t>(e.data(), m));
            return;
        }
        for (std::uint32_t x = 0; x <= left; ++x) {
            e[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return cmp(MonomialOrder::graded_revlex, a, b) == std::strong_ordering::greater;
    });
    return out;
}

} // namespace

Matrix Matrix::identity(std::size_t n, std::uint32_t p)
{
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

std::size_t Matrix::rank() const
{
    Matrix copy = *this;
    return rref_in_place(copy).size();
}

std::vector<Vec> right_nullspace(const Matrix& a)
{
    Matrix r = a;
    const auto pivots = rref_in_place(r);
    const std::uint32_t p = a.modulus();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec x(a.cols(), 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = ff_neg(FpScalar{r.at(i, f)}, p).value;
        basis.push_back(std::move(x));
    }
    return basis;
}

SliceBasis::SliceBasis(std::size_t num_vars, std::uint32_t degree)
    : num_vars_(num_vars), degree_(degree), monomials_(enumerate_monomials(num_vars, degree))
{
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i].key(), i);
}

std::size_t SliceBasis::find(const Monomial& m) const
{
    if (m.num_vars() != num_vars_)
        return dim();
    auto it = index_.find(m.key());
    return it == index_.end() ? dim() : it->second;
}

std::size_t SliceBasis::index_of(const Monomial& m) const
{
    std::size_t i = find(m);
    if (i == dim())
        throw std::invalid_argument("SliceBasis: monomial " + format(m) + " is not in degree " + std::to_string(degree_));
    return i;
}

Vec SliceBasis::coords(const Polynomial& f) const
{
    Vec v(dim(), 0);
    for (const auto& t : f.terms())
        v[index_of(t.mono)] = t.coeff.value;
    return v;
}

Polynomial SliceBasis::to_poly(std::span<const Residue> v, const Prime& prime) const
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            terms.push_back(Term{monomials_[i], FpScalar{v[i]}});
    return Polynomial::from_terms(num_vars_, prime, std::move(terms));
}

SliceBasis monomial_basis(std::size_t num_vars, std::uint32_t degree)
{
    return SliceBasis(num_vars, degree);
}

SubspaceSlice SubspaceSlice::span(std::uint32_t degree, std::size_t ambient_dim, std::uint32_t p,
                                  const std::vector<Vec>& vectors)
{
    SubspaceSlice s(degree, ambient_dim, p);
    for (const auto& v : vectors) {
        if (s.rank() == ambient_dim)
            break;
        s.insert(v);
    }
    return s;
}

Vec SubspaceSlice::reduce(Vec v) const
{
    if (v.size() != ambient_dim_)
        throw std::invalid_argument("SubspaceSlice: vector has wrong length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t c = pivots_[i];
        if (v[c] != 0)
            sub_scaled(v, v[c], rows_[i], c, p_);
    }
    return v;
}

bool SubspaceSlice::contains(std::span<const Residue> v) const
{
    Vec r = reduce(Vec(v.begin(), v.end()));
    return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool SubspaceSlice::insert(Vec v)
{
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
    if (it == v.end())
        return false;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    scale(v, ff_inv(FpScalar{v[c]}, p_).value, c, p_);
    for (auto& row : rows_)
        if (row[c] != 0)
            sub_scaled(row, row[c], v, c, p_);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, c);
    rows_.insert(rows_.begin() + offset, std::move(v));
    return true;
}

SubspaceSlice SubspaceSlice::merge_disjoint(std::uint32_t degree, std::size_t ambient_dim, std::uint32_t p,
                                            std::vector<std::pair<std::size_t, Vec>> pivoted_rows)
{
    std::sort(pivoted_rows.begin(), pivoted_rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SubspaceSlice s(degree, ambient_dim, p);
    for (auto& [pivot, row] : pivoted_rows) {
        s.pivots_.push_back(pivot);
        s.rows_.push_back(std::move(row));
    }
    return s;
}

SliceEngine::SliceEngine(CyclicAction action) : action_(std::move(action)) {}

template <class Key, class T, class Make>
std::shared_ptr<const T> SliceEngine::memo(std::map<Key, std::shared_ptr<const T>>& table, const Key& key, Make make)
{
    {
        std::lock_guard lock(mu_);
        auto it = table.find(key);
        if (it != table.end())
            return it->second;
    }
    auto value = std::make_shared<const T>(make());
    std::lock_guard lock(mu_);
    // a concurrent computation of the same key may have won; values are identical
    return table.emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const SliceBasis> SliceEngine::basis(std::uint32_t d)
{
    return memo(bases_, d, [&] { return SliceBasis(action_.num_vars(), d); });
}

std::shared_ptr<const SparseRows> SliceEngine::sigma(std::uint32_t d)
{
    return memo(sigmas_, d, [&] {
        auto b = basis(d);
        const Prime& prime = action_.prime();
        SparseRows rows(b->dim());
        for (std::size_t i = 0; i < b->dim(); ++i) {
            Polynomial image = act(action_, 1, Polynomial::monomial(b->monomials()[i], prime));
            for (const auto& t : image.terms())
                rows[i].emplace_back(b->index_of(t.mono), t.coeff.value);
            std::sort(rows[i].begin(), rows[i].end());
        }
        return rows;
    });
}

std::shared_ptr<const std::vector<std::vector<std::size_t>>> SliceEngine::blocks(std::uint32_t d)
{
    return memo(blocks_, d, [&] {
        auto s = sigma(d);
        const std::size_t n = s->size();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& entry : (*s)[i])
                parent[find(entry.first)] = find(i);
        std::map<std::size_t, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < n; ++i)
            groups[find(i)].push_back(i);
        std::vector<std::vector<std::size_t>> out;
        for (auto& [root, members] : groups)
            out.push_back(std::move(members));
        std::sort(out.begin(), out.end());
        return out;
    });
}

std::shared_ptr<const SubspaceSlice> SliceEngine::kernel(std::uint64_t n, std::uint32_t d)
{
    if (n == 0)
        throw std::invalid_argument("kernel: the power of Delta must be at least 1");
    return memo(kernels_, std::pair{n, d}, [&] {
        auto b = basis(d);
        auto s = sigma(d);
        auto parts = blocks(d);
        const std::uint32_t p = modulus();
        std::vector<std::pair<std::size_t, Vec>> rows;
        for (const auto& block : *parts) {
            Matrix power = matrix_power(dense_delta(*s, block, p), n);
            auto local = SubspaceSlice::span(d, block.size(), p, left_nullspace(power));
            for (std::size_t i = 0; i < local.rank(); ++i) {
                Vec global(b->dim(), 0);
                for (std::size_t j = 0; j < block.size(); ++j)
                    global[block[j]] = local.rows()[i][j];
                rows.emplace_back(block[local.pivots()[i]], std::move(global));
            }
        }
        return SubspaceSlice::merge_disjoint(d, b->dim(), p, std::move(rows));
    });
}

Matrix operator_matrix(const CyclicAction& a, std::uint64_t n, std::uint32_t d)
{
    SliceEngine engine(a);
    auto s = engine.sigma(d);
    std::vector<std::size_t> all(s->size());
    std::iota(all.begin(), all.end(), 0);
    return matrix_power(dense_delta(*s, all, a.prime().p()), n);
}

SubspaceSlice kernel_slice(const CyclicAction& a, std::uint64_t n, std::uint32_t d)
{
    SliceEngine engine(a);
    return *engine.kernel(n, d);
}

Vec multiply_into(const SliceBasis& source, std::span<const Residue> v, const Polynomial& poly,
                  const SliceBasis& target)
{
    const std::uint32_t p = poly.prime().p();
    std::vector<std::uint64_t> acc(target.dim(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0)
            continue;
        const Monomial& b = source.monomials()[j];
        for (const auto& t : poly.terms())
            acc[target.index_of(b * t.mono)] += std::uint64_t{v[j]} * t.coeff.value;
    }
    Vec out(target.dim());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<Residue>(acc[i] % p);
    return out;
}

GeneratedModule::GeneratedModule(SliceEngine& engine, std::vector<AlgebraGenerator> generators, SliceSource module)
    : engine_(engine), gens_(std::move(generators)), module_(std::move(module))
{
    for (const auto& g : gens_) {
        if (g.degree == 0 || g.poly.is_zero() || !g.poly.is_homogeneous() || g.poly.total_degree() != g.degree)
            throw std::domain_error("GeneratedModule: generator " + format(g.poly) +
                                    " is not homogeneous of positive degree " + std::to_string(g.degree));
        if (!is_invariant(engine_.action(), g.poly))
            throw std::domain_error("GeneratedModule: generator " + format(g.poly) + " is not invariant");
    }
}

std::shared_ptr<const SubspaceSlice> GeneratedModule::positive(std::uint32_t d)
{
    std::lock_guard lock(mu_);
    if (auto it = positive_.find(d); it != positive_.end())
        return it->second;
    auto target = engine_.basis(d);
    SubspaceSlice out(d, target->dim(), engine_.modulus());
    for (const auto& g : gens_) {
        if (g.degree > d)
            continue;
        auto lower = full(d - g.degree);
        auto source = engine_.basis(d - g.degree);
        for (const auto& row : lower->rows()) {
            if (out.rank() == out.ambient_dim())
                break;
            out.insert(multiply_into(*source, row, g.poly, *target));
        }
    }
    return positive_.emplace(d, std::make_shared<const SubspaceSlice>(std::move(out))).first->second;
}

std::shared_ptr<const SubspaceSlice> GeneratedModule::full(std::uint32_t d)
{
    std::lock_guard lock(mu_);
    if (auto it = full_.find(d); it != full_.end())
        return it->second;
    SubspaceSlice out = *positive(d);
    if (auto m = module_(d))
        for (const auto& row : m->rows()) {
            if (out.rank() == out.ambient_dim())
                break;
            out.insert(row);
        }
    return full_.emplace(d, std::make_shared<const SubspaceSlice>(std::move(out))).first->second;
}

SubspaceSlice module_product_slice(SliceEngine& engine, const std::vector<AlgebraGenerator>& algebra_gens,
                                   const std::map<std::uint32_t, SubspaceSlice>& module_slices, std::uint32_t d,
                                   bool positive_only)
{
    GeneratedModule gm(engine, algebra_gens, [&](std::uint32_t e) -> std::shared_ptr<const SubspaceSlice> {
        auto it = module_slices.find(e);
        if (it == module_slices.end())
            return nullptr;
        return std::make_shared<const SubspaceSlice>(it->second);
    });
    return positive_only ? *gm.positive(d) : *gm.full(d);
}

SubspaceSlice transfer_kernel_slice(const CyclicAction& a, Subgroup h, std::uint32_t d)
{
    if (h.index_exponent == 0)
        throw std::invalid_argument("transfer_kernel_slice: H must be a proper subgroup");
    const std::uint64_t index = subgroup_index(a, h);
    SliceEngine engine(a);
    auto s = engine.sigma(d);
    const std::size_t dim = s->size();
    const std::uint32_t p = a.prime().p();

    Matrix sigma(dim, dim, p);
    for (std::size_t i = 0; i < dim; ++i)
        for (const auto& [col, val] : (*s)[i])
            sigma.at(i, col) = val;

    // [sigma^index - 1 | sum_{i < index} sigma^i]; its left kernel is the answer
    Matrix stacked(dim, 2 * dim, p);
    Matrix power = Matrix::identity(dim, p);
    for (std::uint64_t i = 0; i < index; ++i) {
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                stacked.at(r, dim + c) = ff_add(FpScalar{stacked.at(r, dim + c)}, FpScalar{power.at(r, c)}, p).value;
        power = multiply(power, sigma);
    }
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            stacked.at(r, c) = ff_sub(FpScalar{power.at(r, c)}, FpScalar{r == c ? 1u : 0u}, p).value;
    return SubspaceSlice::span(d, dim, p, left_nullspace(stacked));
}

} // namespace modcov
