#pragma once

#include "qgcat/lie/root_system.hpp"

#include <cstdint>
#include <vector>

namespace qgcat::lie {

inline constexpr std::uint64_t default_weyl_limit = 2'000'000;

// One Weyl group element as an integer matrix acting on fundamental coordinates.
struct WeylElement {
    std::vector<int> matrix; // rank x rank, row-major
    int sign = 1;            // det = (-1)^length
    int length = 0;

    Weight apply(const Weight& w) const;
};

// Every element exactly once, in breadth-first order over reduced words.
// Throws CapacityError before enumerating when |W| exceeds limit.
std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::uint64_t limit = default_weyl_limit);

} // namespace qgcat::lie
