#include "category_oracle.hpp"

#include "lie_oracle.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {

namespace {

const long double pi = 3.141592653589793238462643383279502884L;

cplx q_pow(int ell, int z, const qgcat::lie::Rational& e) {
    long double angle = pi * z * static_cast<long double>(e.get_d()) / ell;
    return {std::cos(angle), std::sin(angle)};
}

Weight act(const std::vector<int>& m, const Weight& w) {
    Weight out(w.rank());
    for (int i = 0; i < w.rank(); ++i)
        for (int j = 0; j < w.rank(); ++j) out[i] += m[static_cast<std::size_t>(i * w.rank() + j)] * w[j];
    return out;
}

} // namespace

std::vector<std::vector<cplx>> numeric_weyl_s(const qgcat::lie::RootSystem& rs, int ell, int z,
                                              const std::vector<Weight>& labels) {
    auto group = weyl_closure(rs);
    const Weight rho = rs.rho();
    auto sum = [&](const Weight& a, const Weight& b) {
        cplx s = 0;
        for (const auto& [m, det] : group) s += static_cast<long double>(det) * q_pow(ell, z, 2 * rs.inner(a, act(m, b)));
        return s;
    };
    cplx den = sum(rho, rho);
    std::vector<std::vector<cplx>> s(labels.size(), std::vector<cplx>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j) s[i][j] = sum(labels[i] + rho, labels[j] + rho) / den;
    return s;
}

std::vector<std::vector<std::vector<long>>> numeric_verlinde(const std::vector<std::vector<cplx>>& s,
                                                             const std::vector<std::size_t>& duals, bool* clean) {
    const std::size_t r = s.size();
    cplx d2 = 0;
    for (std::size_t i = 0; i < r; ++i) d2 += s[0][i] * s[0][i];
    *clean = true;
    std::vector<std::vector<std::vector<long>>> n(r, std::vector<std::vector<long>>(r, std::vector<long>(r)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                cplx v = 0;
                for (std::size_t t = 0; t < r; ++t) v += s[i][t] * s[j][t] * s[duals[k]][t] / (d2 * s[0][t]);
                long rounded = std::lround(static_cast<double>(v.real()));
                if (std::fabs(static_cast<double>(v.real()) - rounded) > 1e-6 || std::fabs(static_cast<double>(v.imag())) > 1e-6)
                    *clean = false;
                n[i][j][k] = rounded;
            }
    return n;
}

long su2_fusion(int ell, int a, int b, int c) {
    const int k = ell - 2;
    if ((a + b + c) % 2 != 0) return 0;
    return std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) ? 1 : 0;
}

} // namespace oracle
