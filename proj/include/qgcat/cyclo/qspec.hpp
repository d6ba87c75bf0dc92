#pragma once

#include "qgcat/cyclo/cyclo_number.hpp"

#include <cstdint>

#include <gmpxx.h>

namespace qgcat::cyclo {

// q = exp(z pi i / ell) with the d-th root q^(1/d) = exp(z pi i / (d ell)) = zeta_N^z, N = 2 d ell.
class QSpec {
  public:
    QSpec(int ell, int z, int d = 1);

    int ell() const noexcept { return ell_; }
    int z() const noexcept { return z_; }
    int d() const noexcept { return d_; }
    std::uint32_t conductor() const noexcept { return static_cast<std::uint32_t>(2 * d_ * ell_); }

    // Exponent k with q^(scaled / d) = zeta_N^k, reduced to [0, N).
    std::int64_t zeta_exponent(std::int64_t scaled) const noexcept;

    friend bool operator==(const QSpec&, const QSpec&) = default;

  private:
    int ell_;
    int z_;
    int d_;
};

// Admissible z for a level: 0 < z < 2 ell with gcd(z, ell) = 1.
std::vector<int> admissible_z(int ell);

// q^e; throws PrecisionError when the denominator of e does not divide d.
CycloNumber q_power(const QSpec& spec, const mpq_class& e);
// q^(scaled / d)
CycloNumber q_power_scaled(const QSpec& spec, std::int64_t scaled);
// [n] = (q^n - q^-n) / (q - q^-1)
CycloNumber q_integer(const QSpec& spec, long n);

} // namespace qgcat::cyclo
