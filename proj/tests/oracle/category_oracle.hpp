#pragma once

// Floating-point and closed-form references for the category tests.

#include "qgcat/lie/root_system.hpp"

#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<long double>;

// Weyl-sum S-matrix in long double, over the matrix closure of the simple
// reflections and the rational form; q = exp(z pi i / ell).
std::vector<std::vector<cplx>> numeric_weyl_s(const qgcat::lie::RootSystem& rs, int ell, int z,
                                              const std::vector<qgcat::lie::Weight>& labels);

// Verlinde formula in long double, rounded; entry [i][j][k] = N_{ij}^k.
// duals[k] is the dual label index. Returns false through *clean if any value
// is further than 1e-6 from an integer.
std::vector<std::vector<std::vector<long>>> numeric_verlinde(const std::vector<std::vector<cplx>>& s,
                                                             const std::vector<std::size_t>& duals, bool* clean);

// su(2) at level k = ell - 2: N_{ab}^c = 1 iff |a-b| <= c <= min(a+b, 2k-a-b) and a+b+c even.
long su2_fusion(int ell, int a, int b, int c);

} // namespace oracle
