#pragma once

#include "modcov/hilbert.hpp"
#include "modcov/slices.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modcov {

/// The faithful representations V of a cyclic p-group with codim V^G <= 2
/// and no trivial summands.
enum class CaseKind {
    v2,    // V_2, |G| = p
    v3odd, // V_3, |G| = p > 2
    v2v2,  // V_2 + V_2, |G| = p
    v3c4,  // V_3, G = C_4, p = 2
};

std::string_view kind_name(CaseKind kind);
std::optional<CaseKind> parse_kind(std::string_view name);

/// A case together with the dimension n of the target module W = V_n.
struct CaseSpec {
    CaseKind kind = CaseKind::v2;
    std::uint32_t p = 2;
    std::uint32_t n = 1;

    bool operator==(const CaseSpec&) const = default;
};

/// Throws std::invalid_argument when the parameters are out of range.
void validate(const CaseSpec& spec);
std::string describe(const CaseSpec& spec);

/// k for |G| = p^k.
std::uint32_t group_exponent(CaseKind kind);
CyclicAction make_action(CaseKind kind, std::uint32_t p);

struct CaseData {
    CaseSpec spec;
    CyclicAction action;
    std::vector<AlgebraGenerator> hsop;
    /// Free generators of k[V]^G over the hsop algebra.
    std::vector<Polynomial> secondary;
    /// (r, s) of K_n over the hsop algebra.
    RankS expected;
    /// (r, s) of k[V]^G over the hsop algebra.
    RankS expected_invariants;
    std::vector<Polynomial> candidates;

    std::vector<std::uint32_t> hsop_degrees() const;
};

/// Builds the action, hsop, secondary invariants and the candidate set for
/// K_n; every hsop and secondary element is checked to be invariant.
CaseData build_case(const CaseSpec& spec);

std::vector<Polynomial> candidate_generators(const CaseSpec& spec);

/// Closed forms for (r, s) of K_n over the hsop algebra.
RankS expected_rank_s(const CaseSpec& spec);

/// Largest degree of a polynomial in the list (0 if empty).
std::uint32_t max_degree(const std::vector<Polynomial>& polys);

/// The sets M_k = {x1^i x2^j : i + j = k, i < p, j < p} for V_2 + V_2.
std::vector<Polynomial> v2v2_layer(const CaseData& data, std::uint32_t k);

/// sum_j f_j (x) w_j in k[V] (x) V_n, with sigma w_j = sum_{i<=j} (-1)^{j-i} w_i.
struct Covariant {
    std::vector<Polynomial> components;
};

/// Sum of Delta^i(f) (x) w_{i+1} for i < n. Throws std::domain_error unless
/// Delta^n(f) = 0.
Covariant xi(const CyclicAction& a, std::uint32_t n, const Polynomial& f);

/// The diagonal sigma-action on k[V] (x) V_n.
Covariant act_diagonal(const CyclicAction& a, const Covariant& phi);

/// True iff sigma fixes phi. Throws std::invalid_argument if phi has the
/// wrong number of components.
bool is_covariant(const CyclicAction& a, std::uint32_t n, const Covariant& phi);

/// The degree-d slice of (k[V] (x) V_n)^G, computed directly as the fixed
/// space of the diagonal action. Coordinates are component-major: index
/// j * dim + i is the coefficient of b_i (x) w_{j+1}.
SubspaceSlice covariant_slice(SliceEngine& engine, std::uint32_t n, std::uint32_t d);

Vec covariant_coords(const SliceBasis& basis, const Covariant& phi);

struct XiReport {
    std::uint32_t max_degree = 0;
    bool dims_match = true;
    bool all_covariant = true;
    bool full_rank = true;
    std::vector<std::string> failures;

    bool ok() const { return dims_match && all_covariant && full_rank; }
};

/// Compares Xi(ker Delta^n) with the directly computed covariants in every
/// degree up to max_degree.
XiReport check_xi(SliceEngine& engine, std::uint32_t n, std::uint32_t max_degree);

enum class Lemma {
    x1_power,    // Delta^j(x1^k) on V_3
    x1_power_x2, // Delta^j(x1^k x2) on V_3
    v2v2_lead,   // Delta^k(x1^i x2^j) on V_2 + V_2
    obs,         // lead terms of hsop-algebra elements on V_3
};

std::string_view lemma_name(Lemma lemma);

struct LemmaReport {
    Lemma lemma = Lemma::x1_power;
    std::uint32_t p = 0;
    MonomialOrder order = MonomialOrder::graded_revlex;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    /// Observed data that is reported without being asserted.
    std::vector<std::string> observations;

    bool ok() const { return failures.empty() && checked > 0; }
};

/// Exhaustive (or, for `obs`, randomized) check of a lead-term statement
/// under the monomial order it holds for. Requires p <= 7.
LemmaReport lead_term_lemma_check(std::uint32_t p, Lemma lemma, MonomialOrder order, std::uint64_t seed = 1);

/// The order each lemma is checked under by default.
MonomialOrder lemma_order(Lemma lemma);

} // namespace modcov
