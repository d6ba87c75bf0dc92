#include "qgcat/cyclo/cyclo_number.hpp"

#include "qgcat/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace qgcat::cyclo {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t small_limit = std::int64_t{1} << 62;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

int bits(u128 x) {
    int b = 0;
    while (x) {
        ++b;
        x >>= 1;
    }
    return b;
}

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 x) {
    const bool neg = x < 0;
    u128 u = uabs(x);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 2) <= 62; }

std::shared_ptr<const CyclotomicField> field_of(std::uint32_t n) { return CyclotomicField::get(n); }

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// Reduce c[0..len) (len <= row_limit) into out[0..phi) using the x^k rows; false on possible overflow.
bool reduce_wide(const CyclotomicField& f, const i128* c, int len, i128* out) {
    const int phi = f.degree();
    u128 mx = 0;
    for (int k = 0; k < len; ++k) mx = std::max(mx, uabs(c[k]));
    if (bits(mx) + bits(static_cast<u128>(f.row_mass()) + 1) > 125) return false;
    for (int i = 0; i < phi; ++i) out[i] = i < len ? c[i] : 0;
    for (int k = phi; k < len; ++k) {
        const i128 ck = c[k];
        if (ck == 0) continue;
        const std::int64_t* row = f.row(k);
        for (int i = 0; i < phi; ++i)
            if (row[i]) out[i] += ck * row[i];
    }
    return true;
}

std::vector<mpz_class> reduce_big(const CyclotomicField& f, const std::vector<mpz_class>& c) {
    const int phi = f.degree();
    std::vector<mpz_class> out(static_cast<std::size_t>(phi));
    for (int i = 0; i < phi && i < static_cast<int>(c.size()); ++i) out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    for (int k = phi; k < static_cast<int>(c.size()); ++k) {
        const mpz_class& ck = c[static_cast<std::size_t>(k)];
        if (ck == 0) continue;
        const std::int64_t* row = f.row(k);
        for (int i = 0; i < phi; ++i)
            if (row[i]) out[static_cast<std::size_t>(i)] += ck * static_cast<long>(row[i]);
    }
    return out;
}

} // namespace

CycloNumber::CycloNumber() : CycloNumber(1u) {}

CycloNumber::CycloNumber(std::uint32_t conductor) : field_(field_of(conductor)) {
    s_.assign(static_cast<std::size_t>(field_->degree()), 0);
}

CycloNumber::CycloNumber(std::uint32_t conductor, long value) : CycloNumber(conductor) {
    if (value >= small_limit || value <= -small_limit) {
        std::vector<mpz_class> num(static_cast<std::size_t>(degree()));
        num[0] = value;
        set_big(std::move(num), 1);
    } else {
        s_[0] = value;
    }
}

CycloNumber CycloNumber::rational(std::uint32_t conductor, const mpq_class& value) {
    CycloNumber x(conductor);
    std::vector<mpz_class> num(static_cast<std::size_t>(x.degree()));
    num[0] = value.get_num();
    x.set_big(std::move(num), value.get_den());
    return x;
}

CycloNumber CycloNumber::zeta_power(std::uint32_t conductor, std::int64_t k) {
    CycloNumber x(conductor);
    const std::int64_t e = mod(k, conductor);
    const CyclotomicField& f = *x.field_;
    if (e < f.degree()) {
        x.s_[static_cast<std::size_t>(e)] = 1;
    } else {
        const std::int64_t* row = f.row(static_cast<int>(e));
        std::copy(row, row + f.degree(), x.s_.begin());
    }
    return x;
}

CycloNumber CycloNumber::from_exponents(std::uint32_t conductor, std::span<const std::int64_t> a, std::int64_t den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    CycloNumber x(conductor);
    const CyclotomicField& f = *x.field_;
    const int n = static_cast<int>(conductor);
    std::vector<i128> folded(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k]) folded[k % static_cast<std::size_t>(n)] += a[k];
    std::vector<i128> out(static_cast<std::size_t>(f.degree()));
    if (reduce_wide(f, folded.data(), n, out.data())) {
        x.set_from_wide(out.data(), den);
    } else {
        std::vector<mpz_class> big(folded.size());
        for (std::size_t k = 0; k < folded.size(); ++k) big[k] = to_mpz(folded[k]);
        x.set_big(reduce_big(f, big), den);
    }
    return x;
}

CycloNumber CycloNumber::from_integers(std::uint32_t conductor, const std::vector<mpz_class>& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    CycloNumber x(conductor);
    const CyclotomicField& f = *x.field_;
    if (static_cast<int>(num.size()) > f.row_limit()) {
        std::vector<mpz_class> folded(conductor);
        for (std::size_t k = 0; k < num.size(); ++k) folded[k % conductor] += num[k];
        x.set_big(reduce_big(f, folded), den);
    } else {
        x.set_big(reduce_big(f, num), den);
    }
    return x;
}

CycloNumber CycloNumber::from_coefficients(std::uint32_t conductor, const std::vector<mpq_class>& coeffs) {
    mpz_class den = 1;
    for (const auto& c : coeffs) den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> num(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
    return from_integers(conductor, num, den);
}

void CycloNumber::set_from_wide(const i128* num, i128 den) {
    const int phi = degree();
    if (den == 0) throw DivisionByZero("zero denominator");
    const bool neg = den < 0;
    u128 g = uabs(den);
    bool zero = true;
    for (int i = 0; i < phi; ++i)
        if (num[i]) {
            zero = false;
            g = gcd128(g, uabs(num[i]));
        }
    small_ = true;
    b_.clear();
    s_.assign(static_cast<std::size_t>(phi), 0);
    if (zero) {
        sden_ = 1;
        return;
    }
    const i128 gi = static_cast<i128>(g);
    const i128 d = (neg ? -den : den) / gi;
    bool fits = d < small_limit;
    for (int i = 0; i < phi && fits; ++i) {
        i128 v = (neg ? -num[i] : num[i]) / gi;
        if (v >= small_limit || v <= -small_limit) fits = false;
        else s_[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v);
    }
    if (fits) {
        sden_ = static_cast<std::int64_t>(d);
        return;
    }
    std::vector<mpz_class> big(static_cast<std::size_t>(phi));
    for (int i = 0; i < phi; ++i) big[static_cast<std::size_t>(i)] = to_mpz((neg ? -num[i] : num[i]) / gi);
    set_big(std::move(big), to_mpz(d));
}

void CycloNumber::set_big(std::vector<mpz_class> num, mpz_class den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& v : num) v = -v;
    }
    mpz_class g = den;
    bool zero = true;
    for (const auto& v : num)
        if (v != 0) {
            zero = false;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    if (zero) {
        small_ = true;
        b_.clear();
        s_.assign(static_cast<std::size_t>(degree()), 0);
        sden_ = 1;
        return;
    }
    if (g != 1) {
        den /= g;
        for (auto& v : num) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    bool fits = fits_small(den);
    for (const auto& v : num) fits = fits && fits_small(v);
    if (fits) {
        small_ = true;
        b_.clear();
        s_.resize(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) s_[i] = num[i].get_si();
        sden_ = den.get_si();
    } else {
        small_ = false;
        s_.clear();
        b_ = std::move(num);
        bden_ = std::move(den);
    }
}

bool CycloNumber::is_zero() const noexcept {
    return small_ && std::all_of(s_.begin(), s_.end(), [](std::int64_t v) { return v == 0; });
}

bool CycloNumber::is_one() const noexcept {
    if (!small_ || sden_ != 1 || s_.empty() || s_[0] != 1) return false;
    return std::all_of(s_.begin() + 1, s_.end(), [](std::int64_t v) { return v == 0; });
}

bool CycloNumber::is_rational() const noexcept {
    if (small_) return std::all_of(s_.begin() + 1, s_.end(), [](std::int64_t v) { return v == 0; });
    return std::all_of(b_.begin() + 1, b_.end(), [](const mpz_class& v) { return v == 0; });
}

std::vector<mpz_class> CycloNumber::numerators() const {
    if (!small_) return b_;
    std::vector<mpz_class> out(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) out[i] = static_cast<long>(s_[i]);
    return out;
}

mpz_class CycloNumber::denominator() const { return small_ ? mpz_class(static_cast<long>(sden_)) : bden_; }

std::vector<mpq_class> CycloNumber::coefficients() const {
    auto num = numerators();
    mpz_class den = denominator();
    std::vector<mpq_class> out(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        out[i] = mpq_class(num[i], den);
        out[i].canonicalize();
    }
    return out;
}

double CycloNumber::l1_norm() const {
    if (small_) {
        double s = 0;
        for (auto v : s_) s += std::fabs(static_cast<double>(v));
        return s / static_cast<double>(sden_);
    }
    mpz_class s = 0;
    for (const auto& v : b_) s += abs(v);
    return mpq_class(s, bden_).get_d();
}

CycloNumber CycloNumber::promote(std::uint32_t target) const {
    const std::uint32_t n = conductor();
    if (target == n) return *this;
    if (target % n != 0)
        throw ArgumentError("cannot promote conductor " + std::to_string(n) + " to " + std::to_string(target));
    const std::uint32_t step = target / n;
    if (small_) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(target), 0);
        for (std::size_t i = 0; i < s_.size(); ++i) a[i * step] = s_[i];
        return from_exponents(target, a, sden_);
    }
    std::vector<mpz_class> a(static_cast<std::size_t>(target));
    for (std::size_t i = 0; i < b_.size(); ++i) a[i * step] = b_[i];
    return from_integers(target, a, bden_);
}

CycloNumber CycloNumber::galois(std::int64_t t) const {
    const std::int64_t n = conductor();
    const std::int64_t u = mod(t, n);
    if (std::gcd(u, n) != 1 && n > 1) throw ArgumentError("Galois exponent " + std::to_string(t) + " is not a unit mod " + std::to_string(n));
    if (small_) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < s_.size(); ++i) a[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * u, n))] += s_[i];
        return from_exponents(static_cast<std::uint32_t>(n), a, sden_);
    }
    std::vector<mpz_class> a(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < b_.size(); ++i) a[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * u, n))] += b_[i];
    return from_integers(static_cast<std::uint32_t>(n), a, bden_);
}

CycloNumber CycloNumber::conj() const { return galois(-1); }

CycloNumber galois_apply(const CycloNumber& x, std::int64_t t) { return x.galois(t); }

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (auto& v : out.s_) v = -v;
    for (auto& v : out.b_) v = -v;
    return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    if (o.conductor() != conductor()) {
        const std::uint32_t l = std::lcm(conductor(), o.conductor());
        *this = promote(l);
        return *this += o.promote(l);
    }
    const int phi = degree();
    if (small_ && o.small_) {
        std::vector<i128> num(static_cast<std::size_t>(phi));
        i128 den;
        if (sden_ == o.sden_) {
            for (int i = 0; i < phi; ++i) num[static_cast<std::size_t>(i)] = static_cast<i128>(s_[static_cast<std::size_t>(i)]) + o.s_[static_cast<std::size_t>(i)];
            den = sden_;
        } else {
            for (int i = 0; i < phi; ++i)
                num[static_cast<std::size_t>(i)] = static_cast<i128>(s_[static_cast<std::size_t>(i)]) * o.sden_ +
                                                   static_cast<i128>(o.s_[static_cast<std::size_t>(i)]) * sden_;
            den = static_cast<i128>(sden_) * o.sden_;
        }
        set_from_wide(num.data(), den);
        return *this;
    }
    auto a = numerators();
    auto b = o.numerators();
    mpz_class da = denominator(), db = o.denominator();
    for (int i = 0; i < phi; ++i) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * db + b[static_cast<std::size_t>(i)] * da;
    set_big(std::move(a), da * db);
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() != b.conductor()) {
        const std::uint32_t l = std::lcm(a.conductor(), b.conductor());
        return a.promote(l) * b.promote(l);
    }
    const CyclotomicField& f = *a.field_;
    const int phi = f.degree();
    const int len = 2 * phi - 1;
    CycloNumber out(a.conductor());
    if (a.small_ && b.small_) {
        u128 ma = 0, mb = 0;
        for (auto v : a.s_) ma = std::max(ma, uabs(v));
        for (auto v : b.s_) mb = std::max(mb, uabs(v));
        if (bits(ma) + bits(mb) + bits(static_cast<u128>(phi)) <= 124) {
            std::vector<i128> c(static_cast<std::size_t>(len), 0);
            for (int i = 0; i < phi; ++i) {
                const std::int64_t x = a.s_[static_cast<std::size_t>(i)];
                if (!x) continue;
                for (int j = 0; j < phi; ++j) c[static_cast<std::size_t>(i + j)] += static_cast<i128>(x) * b.s_[static_cast<std::size_t>(j)];
            }
            std::vector<i128> r(static_cast<std::size_t>(phi));
            if (reduce_wide(f, c.data(), len, r.data())) {
                out.set_from_wide(r.data(), static_cast<i128>(a.sden_) * b.sden_);
                return out;
            }
        }
    }
    auto x = a.numerators();
    auto y = b.numerators();
    std::vector<mpz_class> c(static_cast<std::size_t>(len));
    for (int i = 0; i < phi; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < phi; ++j) c[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
    out.set_big(reduce_big(f, c), a.denominator() * b.denominator());
    return out;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    *this = *this * o;
    return *this;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const int phi = degree();
    const CyclotomicField& f = *field_;
    // Column j of the multiplication-by-x matrix is x * zeta^j; solve M y = e_0.
    auto num = numerators();
    std::vector<mpq_class> m(static_cast<std::size_t>(phi * (phi + 1)));
    auto at = [&](int i, int j) -> mpq_class& { return m[static_cast<std::size_t>(i * (phi + 1) + j)]; };
    for (int j = 0; j < phi; ++j) {
        std::vector<mpz_class> c(static_cast<std::size_t>(phi + j));
        for (int i = 0; i < phi; ++i) c[static_cast<std::size_t>(i + j)] = num[static_cast<std::size_t>(i)];
        auto col = reduce_big(f, c);
        for (int i = 0; i < phi; ++i) at(i, j) = col[static_cast<std::size_t>(i)];
    }
    at(0, phi) = 1;
    for (int c = 0; c < phi; ++c) {
        int p = c;
        while (p < phi && at(p, c) == 0) ++p;
        if (p == phi) throw InvariantViolation("singular multiplication matrix for a nonzero cyclotomic number");
        if (p != c)
            for (int j = c; j <= phi; ++j) std::swap(at(p, j), at(c, j));
        for (int i = 0; i < phi; ++i) {
            if (i == c || at(i, c) == 0) continue;
            mpq_class factor = at(i, c) / at(c, c);
            for (int j = c; j <= phi; ++j) at(i, j) -= factor * at(c, j);
        }
    }
    std::vector<mpq_class> y(static_cast<std::size_t>(phi));
    for (int i = 0; i < phi; ++i) y[static_cast<std::size_t>(i)] = at(i, phi) / at(i, i) * denominator();
    return from_coefficients(conductor(), y);
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero cyclotomic number");
    *this = *this * o.inverse();
    return *this;
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber result(conductor(), 1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() != b.conductor()) {
        const std::uint32_t l = std::lcm(a.conductor(), b.conductor());
        return a.promote(l) == b.promote(l);
    }
    if (a.small_ != b.small_) return false;
    if (a.small_) return a.sden_ == b.sden_ && a.s_ == b.s_;
    return a.bden_ == b.bden_ && a.b_ == b.b_;
}

std::size_t CycloNumber::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ conductor();
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 0x100000001b3ull; };
    if (small_) {
        mix(static_cast<std::uint64_t>(sden_));
        for (auto v : s_) mix(static_cast<std::uint64_t>(v));
    } else {
        mix(mpz_get_ui(bden_.get_mpz_t()));
        for (const auto& v : b_) mix(mpz_get_ui(v.get_mpz_t()) ^ static_cast<std::uint64_t>(mpz_sgn(v.get_mpz_t())));
    }
    return static_cast<std::size_t>(h);
}

std::string CycloNumber::str() const {
    auto num = numerators();
    std::string body;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        mpz_class v = num[i];
        if (!body.empty()) body += v < 0 ? " - " : " + ";
        else if (v < 0) body += "-";
        v = abs(v);
        if (i == 0) body += v.get_str();
        else {
            if (v != 1) body += v.get_str() + "*";
            body += i == 1 ? "z" : "z^" + std::to_string(i);
        }
    }
    if (body.empty()) body = "0";
    mpz_class den = denominator();
    if (den == 1) return body;
    return "(" + body + ")/" + den.get_str();
}

} // namespace qgcat::cyclo
