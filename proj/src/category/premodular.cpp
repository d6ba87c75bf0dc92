#include "qgcat/category/premodular.hpp"

#include "qgcat/error.hpp"

#include <atomic>
#include <numeric>
#include <thread>

namespace qgcat::category {

using lie::Weight;

CycloMatrix::CycloMatrix(std::size_t n, std::uint32_t conductor) : n_(n), a_(n * n, CycloNumber(conductor)) {}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

cyclo::QSpec make_qspec(const lie::RootSystem& rs, int ell, int z) { return cyclo::QSpec(ell, z, rs.galois_d()); }

namespace {

void require_alcove(const lie::RootSystem& rs, const cyclo::QSpec& q, const Weight& lambda) {
    if (q.d() != rs.galois_d()) throw ArgumentError("qspec: d does not match the root system");
    lie::Alcove alcove(rs, q.ell());
    if (!alcove.contains(lambda)) throw LabelError("label " + lambda.str() + " is not in the alcove");
}

CycloNumber qdim_numerator(const lie::RootSystem& rs, const cyclo::QSpec& q, const Weight& shifted) {
    CycloNumber num(q.conductor(), 1);
    for (const auto& alpha : rs.positive_roots()) num *= cyclo::q_integer(q, rs.pair_with_root(shifted, alpha));
    return num;
}

std::int64_t twist_exponent(const lie::RootSystem& rs, const cyclo::QSpec& q, const Weight& lambda) {
    Weight two_rho = rs.rho();
    two_rho *= 2;
    return q.zeta_exponent(rs.scaled_inner(lambda, lambda + two_rho));
}

template <class F>
void parallel_rows(std::size_t rows, unsigned threads, F&& f) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < rows; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex m;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < rows;) f(i);
            } catch (...) {
                std::lock_guard lock(m);
                if (!error) error = std::current_exception();
                next = rows;
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

CycloNumber qdim(const lie::RootSystem& rs, const cyclo::QSpec& q, const Weight& lambda) {
    require_alcove(rs, q, lambda);
    CycloNumber num = qdim_numerator(rs, q, lambda + rs.rho());
    CycloNumber den = qdim_numerator(rs, q, rs.rho());
    return num / den;
}

CycloNumber twist(const lie::RootSystem& rs, const cyclo::QSpec& q, const Weight& lambda) {
    require_alcove(rs, q, lambda);
    return CycloNumber::zeta_power(q.conductor(), twist_exponent(rs, q, lambda));
}

CycloNumber global_dimension_squared(const std::vector<CycloNumber>& dims) {
    if (dims.empty()) return CycloNumber();
    CycloNumber sum(dims.front().conductor());
    for (const auto& d : dims) sum += d * d;
    return sum;
}

CycloMatrix s_matrix_from_fusion(const PreModularData& partial) {
    const std::size_t r = partial.rank();
    const std::uint32_t n = partial.conductor();
    const auto& fusion = partial.fusion;
    if (partial.dims.size() != r || partial.twists.size() != r || fusion.rank() != r)
        throw ArgumentError("s_matrix_from_fusion: incomplete data");
    lie::RootSystem rs(partial.type);
    std::vector<std::int64_t> exponent(r);
    for (std::size_t i = 0; i < r; ++i) {
        exponent[i] = twist_exponent(rs, partial.q, partial.labels[i]);
        if (CycloNumber::zeta_power(n, exponent[i]) != partial.twists[i])
            throw InvariantViolation("twist of " + partial.labels[i].str() + " does not match its label");
    }
    // w_k = d_k theta_k over a common denominator, as word-sized power-basis vectors when possible.
    std::vector<CycloNumber> w(r);
    for (std::size_t k = 0; k < r; ++k) w[k] = partial.dims[k] * partial.twists[k];
    const int phi = w.empty() ? 0 : w[0].degree();
    mpz_class common = 1;
    for (const auto& x : w) common = lcm(common, x.denominator());
    bool fast = common.fits_slong_p();
    std::vector<std::int64_t> flat(r * static_cast<std::size_t>(phi), 0);
    std::int64_t max_coeff = 0;
    for (std::size_t k = 0; k < r && fast; ++k) {
        mpz_class scale = common / w[k].denominator();
        auto num = w[k].numerators();
        for (std::size_t t = 0; t < num.size(); ++t) {
            mpz_class v = num[t] * scale;
            if (!v.fits_slong_p() || abs(v) > mpz_class(1) << 40) {
                fast = false;
                break;
            }
            flat[k * static_cast<std::size_t>(phi) + t] = v.get_si();
            max_coeff = std::max<std::int64_t>(max_coeff, std::abs(v.get_si()));
        }
    }
    const std::int64_t den = fast ? common.get_si() : 1;

    CycloMatrix s(r, n);
    parallel_rows(r, 0, [&](std::size_t i) {
        std::vector<std::int64_t> acc(static_cast<std::size_t>(phi));
        std::vector<std::int64_t> rotated(n);
        for (std::size_t j = i; j < r; ++j) {
            auto terms = fusion.product(i, j);
            std::int64_t mass = 0;
            for (const auto& t : terms) mass += t.n;
            const std::int64_t shift = (2 * static_cast<std::int64_t>(n) - exponent[i] - exponent[j]) % n;
            if (fast && mass < (std::int64_t(1) << 20)) {
                std::fill(acc.begin(), acc.end(), 0);
                for (const auto& t : terms) {
                    const std::int64_t* row = &flat[t.k * static_cast<std::size_t>(phi)];
                    for (int c = 0; c < phi; ++c) acc[static_cast<std::size_t>(c)] += t.n * row[c];
                }
                std::fill(rotated.begin(), rotated.end(), 0);
                for (int c = 0; c < phi; ++c) rotated[static_cast<std::size_t>((c + shift) % n)] = acc[static_cast<std::size_t>(c)];
                s(i, j) = CycloNumber::from_exponents(n, rotated, den);
            } else {
                CycloNumber sum(n);
                for (const auto& t : terms) sum += CycloNumber(n, static_cast<long>(t.n)) * w[t.k];
                s(i, j) = sum * CycloNumber::zeta_power(n, shift);
            }
        }
    });
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) s(i, j) = s(j, i);
    return s;
}

CycloMatrix s_matrix_weyl(const lie::RootSystem& rs, const cyclo::QSpec& q, const std::vector<Weight>& labels,
                          std::uint64_t weyl_limit) {
    if (q.d() != rs.galois_d()) throw ArgumentError("qspec: d does not match the root system");
    auto group = lie::weyl_elements(rs, weyl_limit);
    const std::size_t r = labels.size();
    const int rank = rs.rank();
    const std::int64_t n = q.conductor();
    const Weight rho = rs.rho();
    // Orbit images w(mu + rho) for every label.
    std::vector<std::vector<std::int64_t>> images(r);
    for (std::size_t j = 0; j < r; ++j) {
        images[j].reserve(group.size() * static_cast<std::size_t>(rank));
        Weight shifted = labels[j] + rho;
        for (const auto& w : group) {
            Weight v = w.apply(shifted);
            for (int c = 0; c < rank; ++c) images[j].push_back(v[c]);
        }
    }
    // sum_w e(w) zeta^(2 z <x, w y>_d): x enters through its Gram image.
    auto weyl_sum = [&](const Weight& x, const std::vector<std::int64_t>& orbit, std::vector<std::int64_t>& counts) {
        std::vector<std::int64_t> g(static_cast<std::size_t>(rank), 0);
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) g[static_cast<std::size_t>(b)] += x[a] * rs.scaled_gram(a, b);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t e = 0; e < group.size(); ++e) {
            std::int64_t dot = 0;
            const std::int64_t* v = &orbit[e * static_cast<std::size_t>(rank)];
            for (int c = 0; c < rank; ++c) dot += g[static_cast<std::size_t>(c)] * v[c];
            counts[static_cast<std::size_t>(q.zeta_exponent(2 * dot))] += group[e].sign;
        }
        return CycloNumber::from_exponents(static_cast<std::uint32_t>(n), counts, 1);
    };
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
    std::vector<std::int64_t> rho_orbit;
    for (const auto& w : group) {
        Weight v = w.apply(rho);
        for (int c = 0; c < rank; ++c) rho_orbit.push_back(v[c]);
    }
    CycloNumber denominator = weyl_sum(rho, rho_orbit, counts);
    if (denominator.is_zero()) throw DivisionByZero("Weyl denominator vanishes at this q");
    CycloNumber inv = denominator.inverse();
    CycloMatrix s(r, static_cast<std::uint32_t>(n));
    parallel_rows(r, 0, [&](std::size_t i) {
        std::vector<std::int64_t> local(static_cast<std::size_t>(n));
        Weight x = labels[i] + rho;
        for (std::size_t j = i; j < r; ++j) s(i, j) = weyl_sum(x, images[j], local) * inv;
    });
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) s(i, j) = s(j, i);
    return s;
}

void check_compute_scope(const lie::LieType& type, const BuildOptions& options) {
    if (options.large) return;
    bool classical = type.family() == lie::Family::A || type.family() == lie::Family::B ||
                     type.family() == lie::Family::C || type.family() == lie::Family::D;
    if (type.family() == lie::Family::E || (classical && type.rank() >= 5))
        throw ScopeError("fusion and S for " + type.name() + " need the large flag");
}

PreModularData build_premodular(const lie::RootSystem& rs, int ell, int z, const BuildOptions& options) {
    check_compute_scope(rs.type(), options);
    make_qspec(rs, ell, z); // validate z before the expensive part
    return build_premodular(rs, ell, z, fusion_tensor(rs, ell, options.threads), options);
}

PreModularData build_premodular(const lie::RootSystem& rs, int ell, int z, FusionTensor fusion,
                                const BuildOptions& options) {
    check_compute_scope(rs.type(), options);
    PreModularData data;
    data.type = rs.type();
    data.q = make_qspec(rs, ell, z);
    lie::Alcove alcove(rs, ell);
    data.labels = alcove.labels();
    if (fusion.labels() != data.labels) throw ArgumentError("fusion tensor belongs to a different alcove");
    const std::uint32_t n = data.conductor();
    // One inversion of the common denominator prod [<rho, alpha>] serves every label.
    CycloNumber inv_den = qdim_numerator(rs, data.q, rs.rho()).inverse();
    data.dims.resize(data.rank());
    data.twists.resize(data.rank());
    parallel_rows(data.rank(), options.threads, [&](std::size_t i) {
        data.dims[i] = qdim_numerator(rs, data.q, data.labels[i] + rs.rho()) * inv_den;
        data.twists[i] = CycloNumber::zeta_power(n, twist_exponent(rs, data.q, data.labels[i]));
    });
    data.fusion = std::move(fusion);
    data.s = s_matrix_from_fusion(data);
    data.global_dim2 = global_dimension_squared(data.dims);
    return data;
}

PreModularData integer_weight_subcategory(const PreModularData& data) {
    const lie::LieType& t = data.type;
    const int r = t.rank();
    int ratio = 0;
    if (t.family() == lie::Family::A && std::gcd(data.ell(), r + 1) == 1)
        ratio = r + 1;
    else if (t.family() == lie::Family::B && data.ell() % 2 == 1)
        ratio = 2;
    else
        throw ScopeError("integer-weight subcategory is only provided for type A with gcd(ell, r+1) = 1 "
                         "and type B with ell odd");
    lie::RootSystem rs(t);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < data.rank(); ++i)
        if (rs.in_root_lattice(data.labels[i])) subset.push_back(i);
    if (subset.size() * static_cast<std::size_t>(ratio) != data.rank())
        throw InvariantViolation("integer-weight subcategory has rank " + std::to_string(subset.size()) + ", not 1/" +
                                 std::to_string(ratio) + " of " + std::to_string(data.rank()));
    PreModularData sub;
    sub.type = data.type;
    sub.q = data.q;
    try {
        sub.fusion = data.fusion.restrict_to(subset);
    } catch (const ScopeError& e) {
        throw InvariantViolation(std::string("integer weights are not a fusion subcategory: ") + e.what());
    }
    sub.labels = sub.fusion.labels();
    sub.s = CycloMatrix(subset.size(), data.conductor());
    for (std::size_t a = 0; a < subset.size(); ++a) {
        sub.dims.push_back(data.dims[subset[a]]);
        sub.twists.push_back(data.twists[subset[a]]);
        for (std::size_t b = 0; b < subset.size(); ++b) sub.s(a, b) = data.s(subset[a], subset[b]);
    }
    sub.global_dim2 = global_dimension_squared(sub.dims);
    return sub;
}

} // namespace qgcat::category
