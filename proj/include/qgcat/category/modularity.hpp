#pragma once

#include "qgcat/category/premodular.hpp"

#include <string>
#include <vector>

namespace qgcat::category {

// det S != 0 decided exactly: a nonzero image modulo a degree-one prime proves
// det != 0, and an exact kernel vector proves det = 0.
struct DeterminantCertificate {
    bool nonzero = false;
    std::string method;
};
DeterminantCertificate certify_determinant(const CycloMatrix& s);

// Labels i with S_{ij} = d_i d_j for every j (exact equality); always contains 0.
std::vector<std::size_t> obstruction_set(const PreModularData& data);

struct ModularityVerdict {
    bool is_modular = false;
    std::vector<std::size_t> obstructions;
    bool det_nonzero = false;
    std::string det_method;
};
// Computes both criteria and throws InvariantViolation if they disagree.
ModularityVerdict modularity_check(const PreModularData& data);

enum class Expectation { modular, not_modular, unknown };
const char* to_string(Expectation e);
// Theorem-level prediction for q = exp(z pi i / ell).
Expectation expected_modularity(const lie::LieType& type, int ell, int z);
// The integer-weight subcategory is modular wherever integer_weight_subcategory
// applies (type A with gcd(ell, r+1) = 1, type B with ell odd); ScopeError elsewhere.
Expectation expected_subcategory_modularity(const lie::LieType& type, int ell, int z);

struct UnitarityReport {
    bool known_unitary = false;
    std::string unitary_citation;
    bool known_not_unitarizable = false;
    std::string not_unitarizable_citation;
    bool dims_positive = false;
};
UnitarityReport unitarity_report(const lie::LieType& type, int ell, int z, const std::vector<CycloNumber>& dims);
UnitarityReport unitarity_report(const PreModularData& data);

} // namespace qgcat::category
