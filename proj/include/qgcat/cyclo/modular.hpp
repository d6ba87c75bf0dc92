#pragma once

#include "qgcat/cyclo/cyclo_number.hpp"

#include <cstdint>
#include <vector>

namespace qgcat::cyclo {

// Arithmetic modulo a prime below 2^31.
class ModP {
  public:
    explicit ModP(std::uint64_t p);
    std::uint64_t prime() const noexcept { return p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t x = a * b;
        std::uint64_t q = static_cast<std::uint64_t>(static_cast<double>(a) * static_cast<double>(b) * inv_);
        std::int64_t r = static_cast<std::int64_t>(x - q * p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const; // DivisionByZero on 0
    std::uint64_t from_signed(std::int64_t v) const noexcept;
    std::uint64_t from_mpz(const mpz_class& v) const;

  private:
    std::uint64_t p_;
    double inv_;
};

// Primes p = 1 mod N below 2^31, descending from the top, skipping any that
// divide `avoid`.
std::vector<std::uint64_t> primes_one_mod(std::uint32_t conductor, std::size_t count, const mpz_class& avoid = 1);

// Reduction of Z[zeta_N][1/den] modulo the prime ideal (p, zeta_N - omega^u),
// where omega is a fixed primitive N-th root of unity mod p: u runs over the
// units mod N, giving all phi(N) prime ideals above p.
class PrimeEmbedding {
  public:
    PrimeEmbedding(std::uint32_t conductor, std::uint64_t p);

    std::uint32_t conductor() const noexcept { return n_; }
    const ModP& field() const noexcept { return f_; }
    std::uint64_t root() const noexcept { return pow_[1]; }

    // Image of x (conductor must divide N) under zeta_N -> omega^u. Throws
    // DivisionByZero when p divides the denominator of x.
    std::uint64_t image(const CycloNumber& x, std::uint32_t u) const;

  private:
    std::uint32_t n_;
    ModP f_;
    std::vector<std::uint64_t> pow_; // omega^k, k in [0, N)
};

// Determinant of an n x n matrix mod p; the input is consumed.
std::uint64_t det_mod(std::vector<std::uint64_t> m, std::size_t n, const ModP& f);

// Reduced row echelon form mod p of a rows x cols matrix, in place; returns the
// pivot columns in order.
std::vector<std::size_t> rref_mod(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, const ModP& f);

} // namespace qgcat::cyclo
