#include "qgcat/category/properties.hpp"

#include "qgcat/error.hpp"

namespace qgcat::category {

namespace {

std::string at(const PreModularData& d, std::size_t i, std::size_t j) {
    return "(" + d.labels[i].str() + ", " + d.labels[j].str() + ")";
}

} // namespace

std::string check_dimension_homomorphism(const PreModularData& data) {
    const std::size_t r = data.rank();
    if (r == 0) return "";
    const std::uint32_t n = data.conductor();
    const int phi = data.dims[0].degree();

    // Power-basis vectors of the d_k over one denominator, in machine words when they fit.
    mpz_class common = 1;
    for (const auto& x : data.dims) common = lcm(common, x.denominator());
    bool fast = common.fits_slong_p();
    std::vector<std::int64_t> flat(r * static_cast<std::size_t>(phi), 0);
    for (std::size_t k = 0; k < r && fast; ++k) {
        const mpz_class scale = common / data.dims[k].denominator();
        const auto num = data.dims[k].numerators();
        for (std::size_t t = 0; t < num.size(); ++t) {
            const mpz_class v = num[t] * scale;
            if (abs(v) > mpz_class(1) << 40) {
                fast = false;
                break;
            }
            flat[k * static_cast<std::size_t>(phi) + t] = v.get_si();
        }
    }
    const std::int64_t den = fast ? common.get_si() : 1;

    std::vector<std::int64_t> acc(static_cast<std::size_t>(phi));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            const auto terms = data.fusion.product(i, j);
            std::int64_t mass = 0;
            for (const auto& t : terms) mass += t.n;
            CycloNumber sum(n);
            if (fast && mass < (std::int64_t(1) << 20)) {
                std::fill(acc.begin(), acc.end(), 0);
                for (const auto& t : terms) {
                    const std::int64_t* row = &flat[t.k * static_cast<std::size_t>(phi)];
                    for (int c = 0; c < phi; ++c) acc[static_cast<std::size_t>(c)] += t.n * row[c];
                }
                sum = CycloNumber::from_exponents(n, acc, den);
            } else {
                for (const auto& t : terms) sum += CycloNumber(n, static_cast<long>(t.n)) * data.dims[t.k];
            }
            if (!(sum == data.dims[i] * data.dims[j])) return "d_i d_j != sum_k N_ij^k d_k at " + at(data, i, j);
        }
    return "";
}

std::string check_duality_invariances(const PreModularData& data) {
    const std::size_t r = data.rank();
    const auto& n = data.fusion;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t is = n.dual(i);
        if (!(data.dims[is] == data.dims[i])) return "d_{i*} != d_i at " + data.labels[i].str();
        if (!(data.twists[is] == data.twists[i])) return "theta_{i*} != theta_i at " + data.labels[i].str();
        if (!(data.s(0, i) == data.dims[i])) return "S_{0i} != d_i at " + data.labels[i].str();
        for (std::size_t j = 0; j < r; ++j) {
            const auto& sij = data.s(i, j);
            if (!(sij == data.s(j, i))) return "S is not symmetric at " + at(data, i, j);
            if (!(data.s(is, n.dual(j)) == sij)) return "S_{i* j*} != S_{ij} at " + at(data, i, j);
            if (!(data.s(is, j) == sij.conj())) return "S_{i* j} != conj(S_{ij}) at " + at(data, i, j);
        }
    }
    return "";
}

} // namespace qgcat::category
