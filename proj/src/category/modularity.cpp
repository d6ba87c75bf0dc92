#include "qgcat/category/modularity.hpp"

#include "qgcat/cyclo/modular.hpp"
#include "qgcat/cyclo/numeric.hpp"
#include "qgcat/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qgcat::category {

namespace {

mpz_class common_denominator(const CycloMatrix& s) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) l = lcm(l, s(i, j).denominator());
    return l;
}

std::vector<std::uint64_t> image_matrix(const CycloMatrix& s, const cyclo::PrimeEmbedding& e, std::uint32_t u) {
    const std::size_t n = s.size();
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = e.image(s(i, j), u);
    return m;
}

// Nonzero vector v over Q(zeta_N) with sum_c A[:, c] v_c = 0, if one exists;
// A is given by its columns.
std::optional<std::vector<CycloNumber>> exact_nullvector(const CycloMatrix& s, const std::vector<std::size_t>& cols) {
    const std::size_t rows = s.size(), w = cols.size();
    const std::uint32_t n = s(0, 0).conductor();
    std::vector<CycloNumber> a(rows * w);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < w; ++c) a[i * w + c] = s(i, cols[c]);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * w + c].is_zero()) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < w; ++j) std::swap(a[piv * w + j], a[r * w + j]);
        CycloNumber inv = a[r * w + c].inverse();
        for (std::size_t j = c; j < w; ++j) a[r * w + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * w + c].is_zero()) continue;
            CycloNumber f = a[i * w + c];
            for (std::size_t j = c; j < w; ++j) a[i * w + j] -= f * a[r * w + j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() == w) return std::nullopt;
    std::size_t free = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
    std::vector<CycloNumber> v(w, CycloNumber(n));
    v[free] = CycloNumber(n, 1);
    for (std::size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = -a[p * w + free];
    return v;
}

} // namespace

DeterminantCertificate certify_determinant(const CycloMatrix& s) {
    const std::size_t n = s.size();
    if (n == 0) return {true, "empty matrix"};
    const std::uint32_t conductor = s(0, 0).conductor();
    const mpz_class den = common_denominator(s);
    auto primes = cyclo::primes_one_mod(conductor, 3, den);
    for (std::uint64_t p : primes) {
        cyclo::PrimeEmbedding e(conductor, p);
        auto image = image_matrix(s, e, 1);
        if (cyclo::det_mod(image, n, e.field()) != 0)
            return {true, "nonzero modulo a prime above " + std::to_string(p)};
        // Kernel modulo p; its smallest-support vector suggests the exact columns to solve on.
        auto pivots = cyclo::rref_mod(image, n, n, e.field());
        std::vector<char> is_pivot(n, 0);
        for (auto c : pivots) is_pivot[c] = 1;
        std::vector<std::vector<std::size_t>> supports;
        for (std::size_t f = 0; f < n; ++f) {
            if (is_pivot[f]) continue;
            std::vector<std::size_t> support{f};
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (image[r * n + f] != 0) support.push_back(pivots[r]);
            std::sort(support.begin(), support.end());
            supports.push_back(std::move(support));
        }
        std::sort(supports.begin(), supports.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (std::size_t attempt = 0; attempt < std::min<std::size_t>(supports.size(), 4); ++attempt) {
            const auto& cols = supports[attempt];
            if (cols.size() > 64) break;
            auto v = exact_nullvector(s, cols);
            if (!v) continue;
            // Independent confirmation S v = 0 over the full matrix.
            bool zero = true;
            for (std::size_t i = 0; i < n && zero; ++i) {
                CycloNumber acc(conductor);
                for (std::size_t c = 0; c < cols.size(); ++c) acc += s(i, cols[c]) * (*v)[c];
                zero = acc.is_zero();
            }
            if (zero)
                return {false, "exact kernel vector supported on " + std::to_string(cols.size()) + " labels"};
        }
    }
    throw CapacityError("could not certify the determinant of a " + std::to_string(n) + "x" + std::to_string(n) +
                        " S-matrix");
}

std::vector<std::size_t> obstruction_set(const PreModularData& data) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < data.rank(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < data.rank() && all; ++j) all = data.s(i, j) == data.dims[i] * data.dims[j];
        if (all) out.push_back(i);
    }
    return out;
}

ModularityVerdict modularity_check(const PreModularData& data) {
    ModularityVerdict v;
    v.obstructions = obstruction_set(data);
    if (v.obstructions.empty() || v.obstructions.front() != 0)
        throw InvariantViolation("the unit object fails S_{0j} = d_j");
    auto det = certify_determinant(data.s);
    v.det_nonzero = det.nonzero;
    v.det_method = det.method;
    v.is_modular = v.obstructions.size() == 1;
    if (v.is_modular != v.det_nonzero)
        throw InvariantViolation("obstruction set and determinant disagree for " + data.type.name() +
                                 " at ell = " + std::to_string(data.ell()) + ", z = " + std::to_string(data.z()));
    return v;
}

const char* to_string(Expectation e) {
    switch (e) {
    case Expectation::modular: return "modular";
    case Expectation::not_modular: return "not-modular";
    case Expectation::unknown: return "unknown";
    }
    return "unknown";
}

Expectation expected_modularity(const lie::LieType& type, int ell, int z) {
    cyclo::QSpec check(ell, z, 1);
    (void)check;
    lie::RootSystem rs(type);
    const int m = rs.length_ratio();
    const int d = rs.galois_d();
    const int r = type.rank();
    switch (type.family()) {
    case lie::Family::A:
        return std::gcd(z, (r + 1) * ell) == 1 ? Expectation::modular : Expectation::not_modular;
    default: break;
    }
    if (ell % m == 0) return std::gcd(z, d * ell) == 1 ? Expectation::modular : Expectation::unknown;
    switch (type.family()) {
    case lie::Family::B:
        return z % 2 == 1 && r % 2 == 1 ? Expectation::modular : Expectation::not_modular;
    case lie::Family::C: return Expectation::not_modular;
    default: return Expectation::unknown; // F4 with ell odd, G2 with 3 not dividing ell
    }
}

Expectation expected_subcategory_modularity(const lie::LieType& type, int ell, int z) {
    cyclo::QSpec check(ell, z, 1);
    (void)check;
    const int r = type.rank();
    if (type.family() == lie::Family::A && std::gcd(ell, r + 1) == 1) return Expectation::modular;
    if (type.family() == lie::Family::B && ell % 2 == 1) return Expectation::modular;
    throw ScopeError("no integer-weight subcategory prediction for " + type.name() + " at ell = " + std::to_string(ell));
}

UnitarityReport unitarity_report(const lie::LieType& type, int ell, int z, const std::vector<CycloNumber>& dims) {
    cyclo::QSpec check(ell, z, 1);
    (void)check;
    lie::RootSystem rs(type);
    UnitarityReport u;
    const bool uniform = ell % rs.length_ratio() == 0;
    if (uniform && (z == 1 || z == 2 * ell - 1)) {
        u.known_unitary = true;
        u.unitary_citation = "uniform case m | ell with q = exp(+-pi i / ell): positive definite Hermitian form";
    }
    const bool odd_b_or_c = (type.family() == lie::Family::B || type.family() == lie::Family::C) && ell % 2 == 1;
    if (odd_b_or_c && 2 * (2 * type.rank() + 1) < ell) {
        u.known_not_unitarizable = true;
        u.not_unitarizable_citation = type.family() == lie::Family::B
                                          ? "type B, ell odd, 2(2r+1) < ell: no unitarizable braided category "
                                            "with this Grothendieck semiring"
                                          : "type C, ell odd, 2(2r+1) < ell: via rank-level duality with type B";
    }
    u.dims_positive = std::all_of(dims.begin(), dims.end(), [](const CycloNumber& d) { return cyclo::is_positive_real(d); });
    if (u.known_unitary && !u.dims_positive)
        throw InvariantViolation("a known unitary case has a dimension that is not positive");
    if (u.known_unitary && u.known_not_unitarizable)
        throw InvariantViolation("unitarity flags contradict each other");
    return u;
}

UnitarityReport unitarity_report(const PreModularData& data) {
    return unitarity_report(data.type, data.ell(), data.z(), data.dims);
}

} // namespace qgcat::category
