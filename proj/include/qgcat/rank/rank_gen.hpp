#pragma once

#include "qgcat/lie/lie_type.hpp"
#include "qgcat/lie/root_system.hpp"

#include <cstdint>
#include <vector>

namespace qgcat::rank {

// One row of the rank table: part sizes <lambda_i, theta_j>, the smallest
// non-degenerate level in the divisibility class, and ell_m.
struct RankSpec {
    std::vector<int> parts;
    int ell0 = 0;
    int ell_m = 0; // 0 iff m | ell
    friend bool operator==(const RankSpec&, const RankSpec&) = default;
};

// Literal table row for the class selected by ell_m.
RankSpec tabulated_rank_spec(const lie::LieType& t, int ell_m);

// The same row recomputed from the root datum: parts are the marks of theta_j
// (sorted ascending) and ell0 is the least ell > <rho, theta_j> in the class.
RankSpec derived_rank_spec(const lie::RootSystem& rs, int ell_m);

// Table row applicable to ell; throws LevelError when ell < ell0.
RankSpec rank_spec_for(const lie::LieType& t, int ell);

// Number of partitions of n into parts from the multiset.
std::uint64_t partition_count(const std::vector<int>& parts, int n);

// Number of partitions of all 0 <= n <= s into parts from the multiset, i.e.
// the s-th coefficient of 1/(1-x) prod 1/(1-x^k).
std::uint64_t partition_count_upto(const std::vector<int>& parts, int s);

// Coefficients 0..s of 1/(1-x) prod 1/(1-x^k).
std::vector<std::uint64_t> series_upto(const std::vector<int>& parts, int s);

// Rank of the category at level ell as the coefficient of x^(ell - ell0 + ell_m).
std::uint64_t rank_by_gf(const lie::LieType& t, int ell);

} // namespace qgcat::rank
