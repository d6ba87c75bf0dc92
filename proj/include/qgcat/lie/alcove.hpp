#pragma once

#include "qgcat/lie/root_system.hpp"

#include <optional>
#include <vector>

namespace qgcat::lie {

// The fundamental alcove at level ell: dominant lambda with <lambda + rho, theta> < ell,
// where theta is the highest root if m | ell and the highest short root otherwise.
class Alcove {
  public:
    // Throws LevelError unless ell > <rho, theta>, i.e. unless the alcove is non-empty.
    Alcove(const RootSystem& rs, int ell);

    const RootSystem& root_system() const noexcept { return *rs_; }
    int level() const noexcept { return ell_; }
    bool uses_long_root() const noexcept { return long_; } // theta_0 when true
    const Root& theta() const noexcept;
    // marks()[i] = <lambda_i, theta>; the affine wall is sum (a_i + 1) marks_i = ell.
    const std::vector<int>& marks() const noexcept { return marks_; }
    int rho_height() const noexcept { return rho_height_; } // <rho, theta>

    // <lambda + rho, theta>
    int height(const Weight& w) const;
    bool contains(const Weight& w) const;

    // Labels sorted by (<lambda + rho, theta>, coordinates); the zero weight is first.
    const std::vector<Weight>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    // Position of an alcove weight in labels(), or nullopt.
    std::optional<std::size_t> index_of(const Weight& w) const;

    // Dot-action fold of lambda into the alcove. Sign 0 when lambda + rho is on a wall.
    SignedWeight fold(const Weight& lambda) const;
    // Same on x = lambda + rho given directly; returns the label index through *index.
    // This is the hot path of the fusion computation.
    int fold_shifted(Weight x, std::size_t* index) const;

  private:
    const RootSystem* rs_;
    int ell_;
    bool long_;
    std::vector<int> marks_;
    int rho_height_ = 0;
    std::vector<Weight> labels_;
    std::vector<int> radix_;     // mixed-radix lookup table strides
    std::vector<int> bound_;     // max coordinate + 1 per axis
    std::vector<int> lookup_;    // dense index table, -1 for holes
};

std::vector<Weight> enumerate_alcove(const RootSystem& rs, int ell);
SignedWeight affine_fold(const RootSystem& rs, int ell, const Weight& lambda);

} // namespace qgcat::lie
