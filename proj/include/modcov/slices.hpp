#pragma once

#include "modcov/action.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modcov {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
    {
    }

    static Matrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }

    Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix transposed() const;
    bool is_zero() const noexcept;
    std::size_t rank() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<Residue> data_;
};

/// Basis {x : A x = 0} of the right null space of `a`.
std::vector<Vec> right_nullspace(const Matrix& a);

/// Basis {y : y A = 0} of the left null space of `a`.
inline std::vector<Vec> left_nullspace(const Matrix& a)
{
    return right_nullspace(a.transposed());
}

/// All monomials of one degree, sorted descending in graded-revlex; these
/// are the coordinates of k[V]_d.
class SliceBasis {
public:
    SliceBasis(std::size_t num_vars, std::uint32_t degree);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::size_t dim() const noexcept { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

    /// Index of m, or dim() if m is not a monomial of this degree.
    std::size_t find(const Monomial& m) const;
    std::size_t index_of(const Monomial& m) const;

    /// Coordinates of a polynomial that is zero or homogeneous of this degree.
    Vec coords(const Polynomial& f) const;
    Polynomial to_poly(std::span<const Residue> v, const Prime& prime) const;

private:
    std::size_t num_vars_;
    std::uint32_t degree_;
    std::vector<Monomial> monomials_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

SliceBasis monomial_basis(std::size_t num_vars, std::uint32_t degree);

/// A subspace of k[V]_d stored as a reduced row echelon basis.
class SubspaceSlice {
public:
    SubspaceSlice(std::uint32_t degree, std::size_t ambient_dim, std::uint32_t p)
        : degree_(degree), ambient_dim_(ambient_dim), p_(p)
    {
    }

    /// Row-reduced span of arbitrary vectors.
    static SubspaceSlice span(std::uint32_t degree, std::size_t ambient_dim, std::uint32_t p,
                              const std::vector<Vec>& vectors);

    std::uint32_t degree() const noexcept { return degree_; }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Vec>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Adds v to the span; returns true if the rank grew.
    bool insert(Vec v);
    /// Remainder of v after elimination against the rows.
    Vec reduce(Vec v) const;
    bool contains(std::span<const Residue> v) const;
    /// Row-reduced direct sum of slices whose rows have pairwise disjoint supports.
    static SubspaceSlice merge_disjoint(std::uint32_t degree, std::size_t ambient_dim, std::uint32_t p,
                                        std::vector<std::pair<std::size_t, Vec>> pivoted_rows);

    bool operator==(const SubspaceSlice&) const = default;

private:
    std::uint32_t degree_;
    std::size_t ambient_dim_;
    std::uint32_t p_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Sparse rows: row i lists (column, value) pairs.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, Residue>>>;

struct AlgebraGenerator {
    Polynomial poly;
    std::uint32_t degree;
};

/// Memoized degree-slice computations for one action. Safe to share across
/// threads; published slices are immutable.
class SliceEngine {
public:
    explicit SliceEngine(CyclicAction action);

    const CyclicAction& action() const noexcept { return action_; }
    std::uint32_t modulus() const noexcept { return action_.prime().p(); }

    std::shared_ptr<const SliceBasis> basis(std::uint32_t d);
    /// Row i holds the coordinates of sigma(b_i).
    std::shared_ptr<const SparseRows> sigma(std::uint32_t d);
    /// Partition of the basis indices into sigma-stable coordinate blocks.
    std::shared_ptr<const std::vector<std::vector<std::size_t>>> blocks(std::uint32_t d);
    /// ker(Delta^n) in degree d.
    std::shared_ptr<const SubspaceSlice> kernel(std::uint64_t n, std::uint32_t d);

private:
    template <class Key, class T, class Make>
    std::shared_ptr<const T> memo(std::map<Key, std::shared_ptr<const T>>& table, const Key& key, Make make);

    CyclicAction action_;
    std::mutex mu_;
    std::map<std::uint32_t, std::shared_ptr<const SliceBasis>> bases_;
    std::map<std::uint32_t, std::shared_ptr<const SparseRows>> sigmas_;
    std::map<std::uint32_t, std::shared_ptr<const std::vector<std::vector<std::size_t>>>> blocks_;
    std::map<std::pair<std::uint64_t, std::uint32_t>, std::shared_ptr<const SubspaceSlice>> kernels_;
};

/// Matrix of Delta^n on k[V]_d: row i holds the coordinates of Delta^n(b_i).
Matrix operator_matrix(const CyclicAction& a, std::uint64_t n, std::uint32_t d);

/// ker(Delta^n) intersected with k[V]_d. Requires n >= 1.
SubspaceSlice kernel_slice(const CyclicAction& a, std::uint64_t n, std::uint32_t d);

/// The A-module generated by a degree-indexed family of slices M_e, where A is
/// generated by homogeneous invariants. Computes (A M)_d and (A_+ M)_d via
/// (A M)_d = M_d + sum_i a_i (A M)_{d - deg a_i}, memoizing every degree.
class GeneratedModule {
public:
    using SliceSource = std::function<std::shared_ptr<const SubspaceSlice>(std::uint32_t)>;

    /// Throws std::domain_error if a generator is not homogeneous of its
    /// stated positive degree or is not invariant.
    GeneratedModule(SliceEngine& engine, std::vector<AlgebraGenerator> generators, SliceSource module);

    std::shared_ptr<const SubspaceSlice> full(std::uint32_t d);
    std::shared_ptr<const SubspaceSlice> positive(std::uint32_t d);

private:
    SliceEngine& engine_;
    std::vector<AlgebraGenerator> gens_;
    SliceSource module_;
    std::recursive_mutex mu_;
    std::map<std::uint32_t, std::shared_ptr<const SubspaceSlice>> full_, positive_;
};

/// (A M)_d, or (A_+ M)_d when positive_only.
SubspaceSlice module_product_slice(SliceEngine& engine, const std::vector<AlgebraGenerator>& algebra_gens,
                                   const std::map<std::uint32_t, SubspaceSlice>& module_slices, std::uint32_t d,
                                   bool positive_only);

/// Coordinates of poly * v, where v lies in the slice of degree d - deg(poly).
Vec multiply_into(const SliceBasis& source, std::span<const Residue> v, const Polynomial& poly,
                  const SliceBasis& target);

/// {f in k[V]^H_d : Tr^G_H(f) = 0}. Requires H to be a proper subgroup.
SubspaceSlice transfer_kernel_slice(const CyclicAction& a, Subgroup h, std::uint32_t d);

} // namespace modcov
