#pragma once

#include "qgcat/category/premodular.hpp"

#include <string>

namespace qgcat::category {

// Each check returns the empty string on success and a description of the
// first failure otherwise. All comparisons are exact.

// d_i d_j = sum_k N_{ij}^k d_k for all i <= j.
std::string check_dimension_homomorphism(const PreModularData& data);

// d_{i*} = d_i, theta_{i*} = theta_i, S_{0i} = d_i, S_{ij} = S_{ji},
// S_{i* j*} = S_{ij} and S_{i* j} = conj(S_{ij}).
std::string check_duality_invariances(const PreModularData& data);

} // namespace qgcat::category
