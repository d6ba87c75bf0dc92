#pragma once

#include "qgcat/lie/lie_type.hpp"

namespace qgcat::lie {

// Galois integer d as tabulated for each type (1 where the table has no entry).
// RootSystem derives the same number from the Gram matrix; tests pin the two together.
int tabulated_galois_d(const LieType& t);

} // namespace qgcat::lie
