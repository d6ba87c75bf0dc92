#pragma once

#include "qgcat/lie/root_system.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qgcat::lie {

// Weight multiplicities of the irreducible module V(mu), computed with
// Freudenthal's recursion on dominant weights and extended by the W-action.
class WeightSystem {
  public:
    WeightSystem(const RootSystem& rs, const Weight& highest);

    const Weight& highest() const noexcept { return highest_; }
    // Dominant weights with multiplicity, highest first.
    const std::vector<std::pair<Weight, std::int64_t>>& dominant() const noexcept { return dominant_; }
    // Every weight with multiplicity, sorted by coordinates.
    std::vector<std::pair<Weight, std::int64_t>> all() const;
    std::int64_t multiplicity(const Weight& w) const;
    std::int64_t dimension() const;

  private:
    const RootSystem* rs_;
    Weight highest_;
    std::vector<std::pair<Weight, std::int64_t>> dominant_;
    std::unordered_map<Weight, std::int64_t, WeightHash> dom_index_;
};

std::unordered_map<Weight, std::int64_t, WeightHash> weight_multiplicities(const RootSystem& rs, const Weight& mu);

// The W-orbit of w.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

// Weyl dimension formula, exact.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& mu);

} // namespace qgcat::lie
