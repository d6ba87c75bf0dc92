#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code paths with the library beyond RootSystem's Cartan matrix and form.

#include "qgcat/lie/root_system.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using qgcat::lie::RootSystem;
using qgcat::lie::Weight;

// Closure of the simple reflection matrices; each matrix with its determinant.
std::vector<std::pair<std::vector<int>, int>> weyl_closure(const RootSystem& rs);

// Kostant's multiplicity formula with the Kostant partition function.
std::int64_t kostant_multiplicity(const RootSystem& rs, const Weight& highest, const Weight& mu);

// Dominant lambda with <lambda + rho, theta_j> < ell by scanning a box.
std::vector<Weight> alcove_scan(const RootSystem& rs, int ell);

// Sign and target of the dot-action fold by breadth-first search over the
// affine Weyl group generators.
std::pair<Weight, int> fold_bfs(const RootSystem& rs, int ell, const Weight& lambda);

} // namespace oracle
