#pragma once

#include "qgcat/cyclo/cyclo_number.hpp"

#include <complex>
#include <string>

namespace qgcat::cyclo {

// Decimal approximation of the principal embedding zeta_N -> exp(2 pi i / N).
// Each part is within 10^-digits of the true value.
struct ComplexApprox {
    std::string real;
    std::string imag;
    std::complex<double> value;
};

ComplexApprox numeric_value(const CycloNumber& x, int digits);

// Exact self-conjugacy plus a certified sign of the real part. Zero is not positive.
bool is_positive_real(const CycloNumber& x);

// Sign of the real part of the principal embedding, certified by interval
// refinement; 0 only when the real part is exactly zero.
int real_sign(const CycloNumber& x);

} // namespace qgcat::cyclo
