#pragma once

#include "qgcat/category/fusion.hpp"
#include "qgcat/cyclo/qspec.hpp"
#include "qgcat/lie/weyl_group.hpp"

#include <cstdint>
#include <vector>

namespace qgcat::category {

using cyclo::CycloNumber;

// Dense square matrix of cyclotomic numbers, row-major.
class CycloMatrix {
  public:
    CycloMatrix() = default;
    CycloMatrix(std::size_t n, std::uint32_t conductor);

    std::size_t size() const noexcept { return n_; }
    CycloNumber& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const CycloNumber& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    friend bool operator==(const CycloMatrix&, const CycloMatrix&);

  private:
    std::size_t n_ = 0;
    std::vector<CycloNumber> a_;
};

struct BuildOptions {
    bool large = false;  // allow fusion and S for E types and classical rank >= 5
    unsigned threads = 0;
};

// The data of C(g, ell, q) with q = exp(z pi i / ell). Immutable once built.
struct PreModularData {
    lie::LieType type{lie::Family::A, 1};
    cyclo::QSpec q{2, 1, 1};
    std::vector<lie::Weight> labels;
    std::vector<CycloNumber> dims;
    std::vector<CycloNumber> twists;
    FusionTensor fusion;
    CycloMatrix s;
    CycloNumber global_dim2; // D^2 = sum d_i^2

    int ell() const noexcept { return q.ell(); }
    int z() const noexcept { return q.z(); }
    std::size_t rank() const noexcept { return labels.size(); }
    std::uint32_t conductor() const noexcept { return q.conductor(); }
};

// Quantum parameter with d taken from the root system.
cyclo::QSpec make_qspec(const lie::RootSystem& rs, int ell, int z);

// d_lambda = prod_{alpha > 0} [<lambda + rho, alpha>] / [<rho, alpha>]; LabelError off the alcove.
CycloNumber qdim(const lie::RootSystem& rs, const cyclo::QSpec& q, const lie::Weight& lambda);
// theta_lambda = q^<lambda, lambda + 2 rho>.
CycloNumber twist(const lie::RootSystem& rs, const cyclo::QSpec& q, const lie::Weight& lambda);

// S_{ij} = theta_i^-1 theta_j^-1 sum_k N_{ij}^k d_k theta_k, the trace of the double braiding
// on X_i (x) X_j computed from dims, twists and fusion. Summing over N_{i* j}^k instead
// gives S_{i* j}, the complex conjugate.
CycloMatrix s_matrix_from_fusion(const PreModularData& partial);
// S_{lambda mu} = sum_w e(w) q^{2 <lambda + rho, w(mu + rho)>} / sum_w e(w) q^{2 <rho, w rho>}.
CycloMatrix s_matrix_weyl(const lie::RootSystem& rs, const cyclo::QSpec& q, const std::vector<lie::Weight>& labels,
                          std::uint64_t weyl_limit = lie::default_weyl_limit);

// Throws ScopeError for E types and classical rank >= 5 unless options.large.
void check_compute_scope(const lie::LieType& type, const BuildOptions& options);

// Builds dims, twists, fusion, S (through the fusion route) and D^2.
PreModularData build_premodular(const lie::RootSystem& rs, int ell, int z, const BuildOptions& options = {});
// Same, reusing a fusion tensor computed for this (g, ell).
PreModularData build_premodular(const lie::RootSystem& rs, int ell, int z, FusionTensor fusion,
                                const BuildOptions& options = {});

// Labels in the root lattice, for type A with gcd(ell, r+1) = 1 or type B with ell odd;
// ScopeError otherwise and InvariantViolation if the subset is not a fusion subcategory
// of the expected rank.
PreModularData integer_weight_subcategory(const PreModularData& data);

// Sum of d_i^2.
CycloNumber global_dimension_squared(const std::vector<CycloNumber>& dims);

} // namespace qgcat::category
