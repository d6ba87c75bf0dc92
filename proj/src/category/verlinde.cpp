#include "qgcat/category/verlinde.hpp"

#include "qgcat/category/modularity.hpp"
#include "qgcat/cyclo/modular.hpp"
#include "qgcat/error.hpp"

#include <cmath>

namespace qgcat::category {

namespace {

std::vector<std::uint64_t> image_matrix_rows(const CycloMatrix& s, const cyclo::PrimeEmbedding& e, std::uint32_t u) {
    const std::size_t n = s.size();
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = e.image(s(i, j), u);
    return m;
}

} // namespace

FusionTensor verlinde_fusion(const CycloMatrix& s, const std::vector<CycloNumber>& dims,
                             const std::vector<std::size_t>& duals, const std::vector<lie::Weight>& labels) {
    const std::size_t r = s.size();
    if (dims.size() != r || duals.size() != r || labels.size() != r)
        throw ArgumentError("verlinde_fusion: inconsistent sizes");
    if (!certify_determinant(s).nonzero) throw ModularityError("S is singular: the Verlinde formula does not apply");
    const std::uint32_t n = s(0, 0).conductor();
    CycloNumber d2 = global_dimension_squared(dims);
    std::vector<CycloNumber> weight(r);
    for (std::size_t t = 0; t < r; ++t) weight[t] = (d2 * s(0, t)).inverse();
    std::vector<std::vector<FusionTensor::Term>> products(r * (r + 1) / 2);
    std::vector<CycloNumber> a(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            for (std::size_t t = 0; t < r; ++t) a[t] = s(i, t) * s(j, t) * weight[t];
            auto& out = products[FusionTensor::pair_index(r, i, j)];
            for (std::size_t k = 0; k < r; ++k) {
                CycloNumber v(n);
                for (std::size_t t = 0; t < r; ++t) v += a[t] * s(duals[k], t);
                if (v.is_zero()) continue;
                if (!v.is_rational() || v.denominator() != 1 || v.numerators()[0] < 0 ||
                    !v.numerators()[0].fits_slong_p())
                    throw InvariantViolation("Verlinde value " + v.str() + " is not a nonnegative integer at (" +
                                             labels[i].str() + ", " + labels[j].str() + ", " + labels[k].str() + ")");
                out.push_back({static_cast<std::uint32_t>(k), v.numerators()[0].get_si()});
            }
        }
    return FusionTensor(labels, duals, std::move(products));
}

FusionTensor verlinde_fusion(const PreModularData& data) {
    return verlinde_fusion(data.s, data.dims, data.fusion.duals(), data.labels);
}

VerlindeCertificate certify_verlinde(const PreModularData& data) {
    VerlindeCertificate cert;
    const std::size_t r = data.rank();
    const auto& s = data.s;
    const auto& fusion = data.fusion;
    auto fail = [&](std::string why) {
        cert.failure = std::move(why);
        return cert;
    };
    for (std::size_t i = 0; i < r; ++i) {
        if (!(s(0, i) == data.dims[i])) return fail("S_{0j} != d_j");
        for (std::size_t j = 0; j < i; ++j)
            if (!(s(i, j) == s(j, i))) return fail("S is not symmetric");
    }
    if (auto why = check_fusion_symmetries(fusion); !why.empty()) return fail(why);
    if (!certify_determinant(s).nonzero) throw ModularityError("S is singular: the Verlinde formula does not apply");
    // S S e_0 = D^2 e_0, exactly.
    for (std::size_t j = 0; j < r; ++j) {
        CycloNumber acc(data.conductor());
        for (std::size_t t = 0; t < r; ++t) acc += s(j, t) * s(t, 0);
        if (!(acc == (j == 0 ? data.global_dim2 : CycloNumber(data.conductor()))))
            return fail("S S e_0 != D^2 e_0 in row " + data.labels[j].str());
    }
    GenerationTree tree = generation_tree(fusion);
    cert.generators = tree.generators.size();
    if (auto why = check_tree_associativity(fusion, tree); !why.empty()) return fail(why);

    // Generator eigen-identities y = L^2 (sum_k N_{gj}^k S_kt S_0t - S_gt S_jt) lie in Z[zeta_N]
    // with every embedding bounded by B = (c + 1) A^2; a nonzero y has |norm| >= product of
    // the primes it vanishes at, so enough primes force y = 0.
    mpz_class common = 1;
    double a1 = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) common = lcm(common, s(i, j).denominator());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a1 = std::max(a1, s(i, j).l1_norm());
    std::int64_t cmax = 0;
    for (auto g : tree.generators)
        for (std::size_t j = 0; j < r; ++j) {
            std::int64_t c = 0;
            for (const auto& t : fusion.product(g, j)) c += t.n;
            cmax = std::max(cmax, c);
        }
    const double log2_a = std::log2(a1) + static_cast<double>(mpz_sizeinbase(common.get_mpz_t(), 2));
    const double log2_bound = std::log2(static_cast<double>(cmax + 1)) + 2 * log2_a + 1;
    const int phi = s(0, 0).degree();
    const double needed = phi * log2_bound + 1;
    double have = 0;
    const std::uint32_t n = data.conductor();
    const auto& units = cyclo::CyclotomicField::get(n)->units();
    std::size_t batch = static_cast<std::size_t>(needed / (30.0 * phi)) + 2;
    auto primes = cyclo::primes_one_mod(n, batch, common);
    std::vector<std::uint64_t> acc(r);
    for (std::uint64_t p : primes) {
        cyclo::PrimeEmbedding e(n, p);
        const auto& f = e.field();
        for (auto u : units) {
            if (have >= needed) break;
            auto img = image_matrix_rows(s, e, u);
            for (auto g : tree.generators)
                for (std::size_t j = 0; j < r; ++j) {
                    std::fill(acc.begin(), acc.end(), 0);
                    for (const auto& t : fusion.product(g, j)) {
                        const std::uint64_t c = f.from_signed(t.n);
                        const std::uint64_t* row = &img[t.k * r];
                        for (std::size_t col = 0; col < r; ++col) acc[col] = f.add(acc[col], f.mul(c, row[col]));
                    }
                    for (std::size_t col = 0; col < r; ++col)
                        if (f.mul(acc[col], img[col]) != f.mul(img[g * r + col], img[j * r + col]))
                            return fail("column " + data.labels[col].str() + " is not an eigenvector of N_" +
                                        data.labels[g].str());
                }
            have += std::log2(static_cast<double>(p));
            ++cert.embeddings;
        }
        ++cert.primes;
        if (have >= needed) break;
    }
    if (have < needed) return fail("ran out of primes for the eigenvector certificate");
    cert.holds = true;
    return cert;
}

std::string verlinde_round_trip(const PreModularData& data, std::size_t direct_limit) {
    if (data.rank() <= direct_limit) {
        FusionTensor v = verlinde_fusion(data);
        return v == data.fusion ? std::string() : std::string("Verlinde fusion differs from the Racah fusion");
    }
    auto cert = certify_verlinde(data);
    return cert.holds ? std::string() : cert.failure;
}

std::string check_eigenvectors(const PreModularData& data) {
    const std::size_t r = data.rank();
    const auto& s = data.s;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j)
            for (std::size_t t = 0; t < r; ++t) {
                CycloNumber acc(data.conductor());
                for (const auto& term : data.fusion.product(i, j)) acc += CycloNumber(data.conductor(), static_cast<long>(term.n)) * s(term.k, t);
                if (!(acc * s(0, t) == s(i, t) * s(j, t)))
                    return "column " + data.labels[t].str() + " fails for N_" + data.labels[i].str() + " row " +
                           data.labels[j].str();
            }
    return {};
}

} // namespace qgcat::category
