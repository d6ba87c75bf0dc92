#include "qgcat/cyclo/field.hpp"

#include "qgcat/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qgcat::cyclo {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const std::int64_t c = num[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    return q;
}

Poly cyclotomic_polynomial(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

} // namespace

int euler_phi(std::uint32_t n) {
    std::uint32_t result = n, m = n;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return static_cast<int>(result);
}

CyclotomicField::CyclotomicField(std::uint32_t conductor) : n_(conductor) {
    if (conductor == 0) throw ArgumentError("conductor must be positive");
    poly_ = cyclotomic_polynomial(conductor);
    phi_ = static_cast<int>(poly_.size()) - 1;
    row_limit_ = std::max(static_cast<int>(n_), 2 * phi_ - 1);
    rows_.assign(static_cast<std::size_t>(row_limit_) * static_cast<std::size_t>(phi_), 0);
    std::vector<std::int64_t> cur(static_cast<std::size_t>(phi_), 0);
    for (int k = 0; k < row_limit_; ++k) {
        if (k < phi_) {
            std::fill(cur.begin(), cur.end(), 0);
            cur[static_cast<std::size_t>(k)] = 1;
        } else {
            // Multiply the previous row by x and fold the x^phi term.
            const std::int64_t top = cur[static_cast<std::size_t>(phi_ - 1)];
            for (int i = phi_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
            cur[0] = 0;
            for (int i = 0; i < phi_; ++i) cur[static_cast<std::size_t>(i)] -= top * poly_[static_cast<std::size_t>(i)];
            std::int64_t mx = 0;
            for (auto v : cur) mx = std::max<std::int64_t>(mx, v < 0 ? -v : v);
            row_mass_ += mx;
        }
        std::copy(cur.begin(), cur.end(), rows_.begin() + static_cast<std::ptrdiff_t>(k) * phi_);
    }
    for (std::uint32_t t = 1; t < n_; ++t)
        if (std::gcd(t, n_) == 1) units_.push_back(t);
    if (units_.empty()) units_.push_back(1); // N = 1
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint32_t conductor) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const CyclotomicField>> registry;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(conductor);
        if (it != registry.end()) return it->second;
    }
    auto f = std::make_shared<const CyclotomicField>(conductor);
    std::lock_guard<std::mutex> lock(mu);
    return registry.emplace(conductor, f).first->second;
}

} // namespace qgcat::cyclo
