#pragma once

#include "modcov/action.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace modcov {

/// Random polynomial with up to max_terms terms of total degree <= max_degree.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, const Prime& prime, std::uint32_t max_degree,
                             std::size_t max_terms);

/// Random monomial (coefficient 1) of total degree <= max_degree.
Polynomial random_monomial(std::mt19937_64& rng, std::size_t nvars, const Prime& prime, std::uint32_t max_degree);

/// sum_i C(k,i) Delta^i(f) sigma^i(Delta^{k-i}(g)).
Polynomial leibniz_expansion(const CyclicAction& a, std::uint64_t k, const Polynomial& f, const Polynomial& g);

/// Delta(f) sum_{i<k} f^i sigma(f)^{k-1-i}.
Polynomial power_rule_expansion(const CyclicAction& a, std::uint32_t k, const Polynomial& f);

struct PropertyReport {
    std::string property;
    std::string case_label;
    std::size_t samples = 0;
    /// Samples where the hypothesis held and the identity was tested.
    std::size_t applicable = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;

    bool ok() const { return failures == 0 && applicable > 0; }
};

struct PropertyCase {
    std::string label;
    CyclicAction action;
};

/// Every action of the case catalog with p <= max_p.
std::vector<PropertyCase> property_cases(std::uint32_t max_p);

/// Twisted derivation, Leibniz, power rule, sigma Delta = Delta sigma,
/// Delta^q = 0, Delta^{q-1} = Tr^G, the weight product rule and the kernel
/// characterization, each on `samples` random inputs.
std::vector<PropertyReport> run_property_suite(const PropertyCase& c, std::size_t samples, std::uint64_t seed);

} // namespace modcov
