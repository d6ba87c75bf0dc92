#pragma once

#include "qgcat/cyclo/field.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qgcat::cyclo {

// Exact element of Q(zeta_N), stored as an integer vector on the power basis
// 1, zeta, ..., zeta^(phi(N)-1) over a positive common denominator, always
// reduced modulo Phi_N and with gcd(content, denominator) = 1. Values that fit
// in 62 bits are kept in machine words; larger ones switch to GMP.
class CycloNumber {
  public:
    // Zero in Q (conductor 1).
    CycloNumber();
    // Zero at the given conductor.
    explicit CycloNumber(std::uint32_t conductor);
    CycloNumber(std::uint32_t conductor, long value);

    static CycloNumber rational(std::uint32_t conductor, const mpq_class& value);
    // zeta_N^k for any integer k.
    static CycloNumber zeta_power(std::uint32_t conductor, std::int64_t k);
    // sum_k a[k] zeta^k / den over k in [0, a.size()), a.size() <= max(N, 2 phi - 1) or any length
    // that is a multiple of nothing in particular: exponents are taken mod N first.
    static CycloNumber from_exponents(std::uint32_t conductor, std::span<const std::int64_t> a, std::int64_t den = 1);
    // Power-basis coefficients (length <= phi(N)); reduced on construction.
    static CycloNumber from_coefficients(std::uint32_t conductor, const std::vector<mpq_class>& coeffs);
    static CycloNumber from_integers(std::uint32_t conductor, const std::vector<mpz_class>& num, const mpz_class& den);

    std::uint32_t conductor() const noexcept { return field_->conductor(); }
    int degree() const noexcept { return field_->degree(); }
    const CyclotomicField& field() const noexcept { return *field_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    bool is_small() const noexcept { return small_; }

    // Canonical integer numerators and denominator.
    std::vector<mpz_class> numerators() const;
    mpz_class denominator() const;
    // Word-sized view; only valid when is_small().
    std::span<const std::int64_t> small_numerators() const noexcept { return s_; }
    std::int64_t small_denominator() const noexcept { return sden_; }
    // Each coefficient in lowest terms.
    std::vector<mpq_class> coefficients() const;
    // Sum of |numerator| / denominator, an upper bound on every complex embedding.
    double l1_norm() const;

    CycloNumber promote(std::uint32_t conductor) const;
    CycloNumber conj() const;
    CycloNumber galois(std::int64_t t) const;
    CycloNumber inverse() const;
    CycloNumber pow(long e) const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator/=(const CycloNumber& o);
    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    std::size_t hash() const noexcept;
    // Human-readable form such as (3 - 2*z^4)/7 with z = zeta_N.
    std::string str() const;

  private:
    void set_big(std::vector<mpz_class> num, mpz_class den);
    void set_from_wide(const __int128* num, __int128 den);

    std::shared_ptr<const CyclotomicField> field_;
    bool small_ = true;
    std::vector<std::int64_t> s_;
    std::int64_t sden_ = 1;
    std::vector<mpz_class> b_;
    mpz_class bden_;
};

struct CycloHash {
    std::size_t operator()(const CycloNumber& x) const noexcept { return x.hash(); }
};

CycloNumber galois_apply(const CycloNumber& x, std::int64_t t);

} // namespace qgcat::cyclo
