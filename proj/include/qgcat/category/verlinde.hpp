#pragma once

#include "qgcat/category/premodular.hpp"

#include <string>

namespace qgcat::category {

// N_{ij}^k = sum_t S_{it} S_{jt} S_{k* t} / (D^2 S_{0t}), evaluated exactly.
// Throws ModularityError if S is singular and InvariantViolation if a value
// is not a nonnegative integer. Quartic in the rank.
FusionTensor verlinde_fusion(const CycloMatrix& s, const std::vector<CycloNumber>& dims,
                             const std::vector<std::size_t>& duals, const std::vector<lie::Weight>& labels);
FusionTensor verlinde_fusion(const PreModularData& data);

// Exact proof that the Verlinde formula applied to data.s gives data.fusion,
// without evaluating all R^3 coefficients:
//  - S is symmetric with S_{0j} = d_j, det S != 0, and S S e_0 = D^2 e_0;
//  - the fusion tensor has unit and duality laws and a generation tree whose
//    associativity identities hold;
//  - every column of S is an eigenvector of each generator matrix, checked
//    modulo enough degree-one primes that the norm bound forces exact zero.
// Together these give N_i = S diag(S_{it}/S_{0t}) S^{-1} and S^{-1} = S C / D^2.
struct VerlindeCertificate {
    bool holds = false;
    std::string failure;
    std::size_t generators = 0;
    std::size_t primes = 0;
    std::size_t embeddings = 0;
};
VerlindeCertificate certify_verlinde(const PreModularData& data);

// Direct evaluation for small rank, certificate otherwise; empty string on success.
std::string verlinde_round_trip(const PreModularData& data, std::size_t direct_limit = 24);

// Columns of S are eigenvectors of the fusion matrices: for all i, j, t,
// sum_k N_{ij}^k S_{kt} = (S_{it} / S_{0t}) S_{jt}. Exact, cubic in rank times
// the fusion density.
std::string check_eigenvectors(const PreModularData& data);

} // namespace qgcat::category
