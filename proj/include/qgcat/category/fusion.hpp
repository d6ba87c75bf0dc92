#pragma once

#include "qgcat/lie/alcove.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qgcat::category {

// Structure constants N_{ij}^k of the fusion ring on the alcove labels, stored
// sparsely per unordered pair {i, j}.
class FusionTensor {
  public:
    struct Term {
        std::uint32_t k;
        std::int64_t n;
        friend bool operator==(const Term&, const Term&) = default;
    };

    FusionTensor() = default;
    // products[pair_index(i, j)] for i <= j, each sorted by k with n > 0.
    FusionTensor(std::vector<lie::Weight> labels, std::vector<std::size_t> duals,
                 std::vector<std::vector<Term>> products);

    std::size_t rank() const noexcept { return labels_.size(); }
    const std::vector<lie::Weight>& labels() const noexcept { return labels_; }
    std::size_t dual(std::size_t i) const { return duals_[i]; }
    const std::vector<std::size_t>& duals() const noexcept { return duals_; }

    // Nonzero terms of X_i (x) X_j, sorted by k.
    std::span<const Term> product(std::size_t i, std::size_t j) const;
    std::int64_t coefficient(std::size_t i, std::size_t j, std::size_t k) const;
    // Dense fusion matrix with (N_i)_{kj} = N_{ij}^k, row-major.
    std::vector<std::int64_t> matrix(std::size_t i) const;
    std::size_t nonzeros() const noexcept { return terms_.size(); }

    static std::size_t pair_index(std::size_t rank, std::size_t i, std::size_t j) noexcept;

    // Restriction to a subset of labels closed under fusion and duality;
    // throws ScopeError otherwise.
    FusionTensor restrict_to(const std::vector<std::size_t>& subset) const;

    friend bool operator==(const FusionTensor& a, const FusionTensor& b);

  private:
    std::vector<lie::Weight> labels_;
    std::vector<std::size_t> duals_;
    std::vector<std::size_t> offsets_;
    std::vector<Term> terms_;
};

// Quantum Racah formula in Kac-Walton form: fold lambda + kappa over the weights
// kappa of the smaller factor, with multiplicities, into the alcove.
// Independent of z. threads = 0 picks the hardware concurrency.
FusionTensor fusion_tensor(const lie::RootSystem& rs, int ell, unsigned threads = 0);

// Every label is either a generator or is reached from an earlier label mu by
// a generator g, with lambda the only constituent of g (x) mu not yet reached.
struct GenerationTree {
    struct Step {
        std::size_t label, generator, factor;
    };
    std::vector<std::size_t> generators;
    std::vector<Step> steps;
};
// Generators start from the fundamental weights present in the alcove.
GenerationTree generation_tree(const FusionTensor& n);
// Checks X_g (x) (X_mu (x) X_j) = (X_g (x) X_mu) (x) X_j for every step and every j.
std::string check_tree_associativity(const FusionTensor& n, const GenerationTree& tree);

// Each check returns the empty string on success and a description of the
// first failure otherwise.
std::string check_fusion_symmetries(const FusionTensor& n);
// All fusion matrices commute: the generator matrices commute and, through the
// tree identities, every other matrix is a polynomial in them.
std::string check_fusion_commutativity(const FusionTensor& n);
// Same by direct sparse products over all pairs; cubic in the rank.
std::string check_fusion_commutativity_direct(const FusionTensor& n);

// Characteristic polynomial of an integer matrix, constant term first.
std::vector<mpz_class> characteristic_polynomial(const std::vector<std::int64_t>& m, std::size_t n);
// True iff N_i has pairwise distinct eigenvalues, decided by gcd(chi, chi') = 1
// over Q.
bool fusion_determined_by_one_matrix(const FusionTensor& n, std::size_t i);

} // namespace qgcat::category
