#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qgcat::cyclo {

// Shared data for Q(zeta_N): the cyclotomic polynomial and the reductions of
// x^k for phi(N) <= k < max(N, 2 phi(N) - 1). Instances are interned per
// conductor and immutable, so they can be shared across threads.
class CyclotomicField {
  public:
    static std::shared_ptr<const CyclotomicField> get(std::uint32_t conductor);

    std::uint32_t conductor() const noexcept { return n_; }
    int degree() const noexcept { return phi_; }
    // Monic Phi_N, degree() + 1 coefficients, constant term first.
    const std::vector<std::int64_t>& polynomial() const noexcept { return poly_; }

    // x^k mod Phi_N for k < row_limit(); row(k) has degree() entries.
    int row_limit() const noexcept { return row_limit_; }
    const std::int64_t* row(int k) const noexcept {
        return rows_.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(phi_);
    }
    // Sum over k >= degree() of max |row(k)[i]|, bounding coefficient growth during reduction.
    std::int64_t row_mass() const noexcept { return row_mass_; }

    // Residues in [1, N) coprime to N.
    const std::vector<std::uint32_t>& units() const noexcept { return units_; }

    explicit CyclotomicField(std::uint32_t conductor);

  private:
    std::uint32_t n_;
    int phi_;
    int row_limit_;
    std::int64_t row_mass_ = 0;
    std::vector<std::int64_t> poly_;
    std::vector<std::int64_t> rows_;
    std::vector<std::uint32_t> units_;
};

// Euler phi.
int euler_phi(std::uint32_t n);

} // namespace qgcat::cyclo
