#include "qgcat/cyclo/qspec.hpp"

#include "qgcat/error.hpp"

#include <numeric>

namespace qgcat::cyclo {

QSpec::QSpec(int ell, int z, int d) : ell_(ell), z_(z), d_(d) {
    if (ell < 1) throw ArgumentError("level must be positive, got " + std::to_string(ell));
    if (d < 1) throw ArgumentError("d must be positive");
    if (z <= 0 || z >= 2 * ell)
        throw ArgumentError("z = " + std::to_string(z) + " must satisfy 0 < z < 2 ell = " + std::to_string(2 * ell));
    if (std::gcd(z, ell) != 1)
        throw ArgumentError("z = " + std::to_string(z) + " is not coprime to ell = " + std::to_string(ell));
}

std::int64_t QSpec::zeta_exponent(std::int64_t scaled) const noexcept {
    const std::int64_t n = conductor();
    std::int64_t k = (scaled % n) * z_ % n;
    return k < 0 ? k + n : k;
}

std::vector<int> admissible_z(int ell) {
    std::vector<int> out;
    for (int z = 1; z < 2 * ell; ++z)
        if (std::gcd(z, ell) == 1) out.push_back(z);
    return out;
}

CycloNumber q_power_scaled(const QSpec& spec, std::int64_t scaled) {
    return CycloNumber::zeta_power(spec.conductor(), spec.zeta_exponent(scaled));
}

CycloNumber q_power(const QSpec& spec, const mpq_class& e) {
    mpq_class scaled = e * spec.d();
    scaled.canonicalize();
    if (scaled.get_den() != 1)
        throw PrecisionError("exponent " + e.get_str() + " has a denominator that does not divide d = " + std::to_string(spec.d()));
    const mpz_class n = spec.conductor();
    mpz_class k = scaled.get_num() % n;
    return q_power_scaled(spec, k.get_si());
}

CycloNumber q_integer(const QSpec& spec, long n) {
    const std::uint32_t big_n = spec.conductor();
    // q^(2 ell) = 1, so [n] only depends on n mod 2 ell.
    const long period = 2L * spec.ell();
    const long m = ((n % period) + period) % period;
    if (m == 0) return CycloNumber(big_n);
    // [m] = sum_{k=0}^{m-1} q^(m-1-2k)
    std::vector<std::int64_t> a(big_n, 0);
    for (long k = 0; k < m; ++k) a[static_cast<std::size_t>(spec.zeta_exponent(static_cast<std::int64_t>(m - 1 - 2 * k) * spec.d()))] += 1;
    return CycloNumber::from_exponents(big_n, a);
}

} // namespace qgcat::cyclo
