#include "qgcat/cyclo/modular.hpp"

#include "qgcat/error.hpp"

#include <numeric>

namespace qgcat::cyclo {

ModP::ModP(std::uint64_t p) : p_(p), inv_(1.0 / static_cast<double>(p)) {
    if (p < 2 || p >= (1ULL << 31)) throw ArgumentError("ModP: prime out of range");
}

std::uint64_t ModP::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}

std::uint64_t ModP::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw DivisionByZero("ModP: inverse of zero");
    return pow(a % p_, p_ - 2);
}

std::uint64_t ModP::from_signed(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

std::uint64_t ModP::from_mpz(const mpz_class& v) const {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL})
        if (n % d == 0) return n == d;
    // Deterministic Miller-Rabin for n < 2^32.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
        if (a % n == 0) continue;
        std::uint64_t x = 1, b = a % n, e = d;
        for (; e; e >>= 1, b = b * b % n)
            if (e & 1) x = x * b % n;
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s && witness; ++r) {
            x = x * x % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

std::vector<std::uint64_t> primes_one_mod(std::uint32_t conductor, std::size_t count, const mpz_class& avoid) {
    std::vector<std::uint64_t> out;
    const std::uint64_t n = conductor;
    std::uint64_t top = ((1ULL << 31) - 1) / n * n + 1;
    if (top >= (1ULL << 31)) top -= n;
    for (std::uint64_t p = top; out.size() < count && p > n; p -= n) {
        if (!is_prime(p)) continue;
        if (avoid != 0 && mpz_divisible_ui_p(avoid.get_mpz_t(), p)) continue;
        out.push_back(p);
    }
    if (out.size() < count) throw CapacityError("primes_one_mod: not enough primes below 2^31");
    return out;
}

PrimeEmbedding::PrimeEmbedding(std::uint32_t conductor, std::uint64_t p) : n_(conductor), f_(p) {
    if ((p - 1) % conductor != 0) throw ArgumentError("PrimeEmbedding: p is not 1 mod N");
    // A primitive N-th root: g^((p-1)/N) for g whose image has exact order N.
    std::vector<std::uint64_t> prime_factors;
    for (std::uint64_t t = conductor, q = 2; t > 1; ++q)
        if (t % q == 0) {
            prime_factors.push_back(q);
            while (t % q == 0) t /= q;
        }
    std::uint64_t omega = 0;
    for (std::uint64_t g = 2; g < p && omega == 0; ++g) {
        std::uint64_t w = f_.pow(g, (p - 1) / conductor);
        bool primitive = conductor == 1 || w != 1;
        for (auto q : prime_factors)
            if (f_.pow(w, conductor / q) == 1) primitive = false;
        if (primitive) omega = w;
    }
    if (omega == 0) throw InvariantViolation("PrimeEmbedding: no primitive root found");
    pow_.resize(conductor);
    pow_[0] = 1;
    for (std::uint32_t k = 1; k < conductor; ++k) pow_[k] = f_.mul(pow_[k - 1], omega);
}

std::uint64_t PrimeEmbedding::image(const CycloNumber& x, std::uint32_t u) const {
    const std::uint32_t c = x.conductor();
    if (n_ % c != 0) throw ArgumentError("PrimeEmbedding: conductor mismatch");
    const std::uint64_t step = static_cast<std::uint64_t>(n_ / c) * u % n_;
    std::uint64_t acc = 0, den;
    if (x.is_small()) {
        auto num = x.small_numerators();
        for (std::size_t i = 0; i < num.size(); ++i)
            if (num[i] != 0) acc = f_.add(acc, f_.mul(f_.from_signed(num[i]), pow_[step * i % n_]));
        den = f_.from_signed(x.small_denominator());
    } else {
        auto num = x.numerators();
        for (std::size_t i = 0; i < num.size(); ++i)
            if (num[i] != 0) acc = f_.add(acc, f_.mul(f_.from_mpz(num[i]), pow_[step * i % n_]));
        den = f_.from_mpz(x.denominator());
    }
    return f_.mul(acc, f_.inv(den));
}

std::uint64_t det_mod(std::vector<std::uint64_t> m, std::size_t n, const ModP& f) {
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
            det = f.sub(0, det);
        }
        det = f.mul(det, m[c * n + c]);
        std::uint64_t inv = f.inv(m[c * n + c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            std::uint64_t factor = f.mul(m[i * n + c], inv);
            if (factor == 0) continue;
            std::uint64_t* row = &m[i * n];
            const std::uint64_t* prow = &m[c * n];
            for (std::size_t j = c; j < n; ++j) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
        }
    }
    return det;
}

std::vector<std::size_t> rref_mod(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, const ModP& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        std::uint64_t inv = f.inv(m[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = f.mul(m[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t factor = m[i * cols + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = f.sub(m[i * cols + j], f.mul(factor, m[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace qgcat::cyclo
