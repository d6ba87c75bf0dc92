#include "qgcat/category/fusion.hpp"

#include "qgcat/error.hpp"
#include "qgcat/lie/multiplicities.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace qgcat::category {

using lie::Weight;

std::size_t FusionTensor::pair_index(std::size_t rank, std::size_t i, std::size_t j) noexcept {
    if (i > j) std::swap(i, j);
    return i * rank - i * (i + 1) / 2 + j;
}

FusionTensor::FusionTensor(std::vector<Weight> labels, std::vector<std::size_t> duals,
                           std::vector<std::vector<Term>> products)
    : labels_(std::move(labels)), duals_(std::move(duals)) {
    const std::size_t r = labels_.size();
    if (duals_.size() != r || products.size() != r * (r + 1) / 2)
        throw ArgumentError("fusion tensor: inconsistent sizes");
    offsets_.assign(products.size() + 1, 0);
    std::size_t total = 0;
    for (std::size_t p = 0; p < products.size(); ++p) {
        offsets_[p] = total;
        total += products[p].size();
    }
    offsets_.back() = total;
    terms_.reserve(total);
    for (auto& v : products) {
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (v[t].n <= 0 || v[t].k >= r || (t > 0 && v[t - 1].k >= v[t].k))
                throw InvariantViolation("fusion tensor: malformed product list");
        }
        terms_.insert(terms_.end(), v.begin(), v.end());
    }
}

std::span<const FusionTensor::Term> FusionTensor::product(std::size_t i, std::size_t j) const {
    if (i >= rank() || j >= rank()) throw LabelError("fusion tensor: label index out of range");
    std::size_t p = pair_index(rank(), i, j);
    return {terms_.data() + offsets_[p], offsets_[p + 1] - offsets_[p]};
}

std::int64_t FusionTensor::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    auto terms = product(i, j);
    auto it = std::lower_bound(terms.begin(), terms.end(), k,
                               [](const Term& t, std::size_t key) { return t.k < key; });
    return it != terms.end() && it->k == k ? it->n : 0;
}

std::vector<std::int64_t> FusionTensor::matrix(std::size_t i) const {
    const std::size_t r = rank();
    std::vector<std::int64_t> m(r * r, 0);
    for (std::size_t j = 0; j < r; ++j)
        for (const Term& t : product(i, j)) m[t.k * r + j] = t.n;
    return m;
}

FusionTensor FusionTensor::restrict_to(const std::vector<std::size_t>& subset) const {
    std::vector<long> pos(rank(), -1);
    for (std::size_t a = 0; a < subset.size(); ++a) {
        if (subset[a] >= rank()) throw LabelError("restriction: label index out of range");
        pos[subset[a]] = static_cast<long>(a);
    }
    std::vector<Weight> labels;
    std::vector<std::size_t> duals;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        labels.push_back(labels_[subset[a]]);
        long d = pos[duals_[subset[a]]];
        if (d < 0) throw ScopeError("restriction: subset is not closed under duality");
        duals.push_back(static_cast<std::size_t>(d));
    }
    const std::size_t r = subset.size();
    std::vector<std::vector<Term>> products(r * (r + 1) / 2);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            auto& out = products[pair_index(r, a, b)];
            for (const Term& t : product(subset[a], subset[b])) {
                long k = pos[t.k];
                if (k < 0) throw ScopeError("restriction: subset is not closed under fusion");
                out.push_back({static_cast<std::uint32_t>(k), t.n});
            }
            std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
        }
    return FusionTensor(std::move(labels), std::move(duals), std::move(products));
}

bool operator==(const FusionTensor& a, const FusionTensor& b) {
    return a.labels_ == b.labels_ && a.duals_ == b.duals_ && a.offsets_ == b.offsets_ && a.terms_ == b.terms_;
}

namespace {

unsigned worker_count(unsigned threads, std::size_t jobs) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

} // namespace

FusionTensor fusion_tensor(const lie::RootSystem& rs, int ell, unsigned threads) {
    lie::Alcove alcove(rs, ell);
    const auto& labels = alcove.labels();
    const std::size_t r = labels.size();
    std::vector<std::size_t> duals(r);
    for (std::size_t i = 0; i < r; ++i) duals[i] = *alcove.index_of(rs.dual(labels[i]));

    // The factor of smaller classical dimension is the one expanded into weights.
    std::vector<mpz_class> dim(r);
    for (std::size_t i = 0; i < r; ++i) dim[i] = lie::weyl_dimension(rs, labels[i]);
    auto key_less = [&](std::size_t a, std::size_t b) { return dim[a] != dim[b] ? dim[a] < dim[b] : a < b; };

    std::vector<std::vector<FusionTensor::Term>> products(r * (r + 1) / 2);
    const Weight rho = rs.rho();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto work = [&] {
        std::vector<std::int64_t> acc(r, 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t b; (b = next.fetch_add(1)) < r && !failed;) {
            if (b == 0) {
                for (std::size_t a = 0; a < r; ++a)
                    products[FusionTensor::pair_index(r, 0, a)] = {{static_cast<std::uint32_t>(a), 1}};
                continue;
            }
            auto weights = lie::WeightSystem(rs, labels[b]).all();
            for (std::size_t a = 1; a < r; ++a) {
                if (a != b && key_less(a, b)) continue;
                Weight base = labels[a] + rho;
                for (const auto& [kappa, mult] : weights) {
                    std::size_t idx = 0;
                    int sign = alcove.fold_shifted(base + kappa, &idx);
                    if (sign == 0) continue;
                    if (acc[idx] == 0) touched.push_back(static_cast<std::uint32_t>(idx));
                    acc[idx] += sign * mult;
                }
                auto& out = products[FusionTensor::pair_index(r, a, b)];
                std::sort(touched.begin(), touched.end());
                bool bad = false;
                for (auto k : touched) {
                    if (acc[k] < 0) bad = true;
                    if (acc[k] > 0) out.push_back({k, acc[k]});
                    acc[k] = 0;
                }
                touched.clear();
                if (bad) {
                    std::lock_guard lock(failure_mutex);
                    failure = "negative fusion coefficient in " + labels[a].str() + " x " + labels[b].str();
                    failed = true;
                    return;
                }
            }
        }
    };
    unsigned n = worker_count(threads, r);
    if (n == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failed) throw InvariantViolation(failure);
    return FusionTensor(labels, std::move(duals), std::move(products));
}

GenerationTree generation_tree(const FusionTensor& n) {
    const std::size_t r = n.rank();
    GenerationTree tree;
    std::vector<char> reached(r, 0);
    if (r == 0) return tree;
    reached[0] = 1;
    for (std::size_t i = 1; i < r; ++i) {
        const Weight& w = n.labels()[i];
        int nonzero = 0;
        for (int c : w) nonzero += c != 0;
        if (nonzero == 1 && *std::max_element(w.begin(), w.end()) == 1) {
            tree.generators.push_back(i);
            reached[i] = 1;
        }
    }
    std::vector<std::size_t> order{0};
    for (auto g : tree.generators) order.push_back(g);
    std::size_t done = order.size();
    while (done < r) {
        bool progress = false;
        // Sweep the reached labels in the order they were reached.
        for (std::size_t p = 0; p < order.size() && done < r; ++p) {
            std::size_t mu = order[p];
            for (std::size_t g : tree.generators) {
                std::size_t fresh = r;
                int count = 0;
                for (const auto& t : n.product(g, mu))
                    if (!reached[t.k]) {
                        fresh = t.k;
                        ++count;
                    }
                if (count == 1) {
                    reached[fresh] = 1;
                    order.push_back(fresh);
                    tree.steps.push_back({fresh, g, mu});
                    ++done;
                    progress = true;
                }
            }
        }
        if (!progress) {
            std::size_t extra = 0;
            while (reached[extra]) ++extra;
            tree.generators.push_back(extra);
            reached[extra] = 1;
            order.push_back(extra);
            ++done;
        }
    }
    return tree;
}

namespace {

// Row j of N'_a N'_b, i.e. the expansion of X_a (x) (X_b (x) X_j) .. written as
// sum_m N_{b j}^m (X_a (x) X_m).
void accumulate_left(const FusionTensor& n, std::size_t a, std::size_t b, std::size_t j,
                     std::vector<std::int64_t>& acc, std::int64_t sign) {
    for (const auto& t : n.product(b, j))
        for (const auto& u : n.product(a, t.k)) acc[u.k] += sign * t.n * u.n;
}

std::string describe_pair(const FusionTensor& n, std::size_t a, std::size_t b) {
    return n.labels()[a].str() + ", " + n.labels()[b].str();
}

// N'_a N'_b == N'_b N'_a, row by row.
bool matrices_commute(const FusionTensor& n, std::size_t a, std::size_t b, std::vector<std::int64_t>& acc) {
    for (std::size_t j = 0; j < n.rank(); ++j) {
        accumulate_left(n, a, b, j, acc, 1);
        accumulate_left(n, b, a, j, acc, -1);
        bool ok = std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
        std::fill(acc.begin(), acc.end(), 0);
        if (!ok) return false;
    }
    return true;
}

} // namespace

std::string check_tree_associativity(const FusionTensor& n, const GenerationTree& tree) {
    const std::size_t r = n.rank();
    std::vector<std::int64_t> acc(r, 0);
    for (const auto& step : tree.steps) {
        if (n.coefficient(step.generator, step.factor, step.label) == 0)
            return "tree step does not produce its label";
        for (std::size_t j = 0; j < r; ++j) {
            // g (x) (mu (x) j) against (g (x) mu) (x) j.
            accumulate_left(n, step.generator, step.factor, j, acc, 1);
            for (const auto& t : n.product(step.generator, step.factor))
                for (const auto& u : n.product(t.k, j)) acc[u.k] -= t.n * u.n;
            bool ok = std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
            std::fill(acc.begin(), acc.end(), 0);
            if (!ok)
                return "associativity fails for (" + describe_pair(n, step.generator, step.factor) + ", " +
                       n.labels()[j].str() + ")";
        }
    }
    return {};
}

std::string check_fusion_symmetries(const FusionTensor& n) {
    const std::size_t r = n.rank();
    if (r == 0) return "empty label set";
    for (std::size_t i = 0; i < r; ++i) {
        if (n.dual(n.dual(i)) != i) return "duality is not an involution at " + n.labels()[i].str();
        auto unit = n.product(0, i);
        if (unit.size() != 1 || unit[0].k != i || unit[0].n != 1) return "unit law fails at " + n.labels()[i].str();
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            if (n.coefficient(i, j, 0) != (j == n.dual(i) ? 1 : 0))
                return "N_{ij}^0 != delta_{i,j*} at " + describe_pair(n, i, j);
            for (const auto& t : n.product(i, j)) {
                std::size_t k = t.k;
                if (n.coefficient(i, n.dual(k), n.dual(j)) != t.n || n.coefficient(j, n.dual(k), n.dual(i)) != t.n ||
                    n.coefficient(n.dual(i), n.dual(j), n.dual(k)) != t.n)
                    return "fusion symmetry fails at " + describe_pair(n, i, j) + " -> " + n.labels()[k].str();
            }
        }
    return {};
}

std::string check_fusion_commutativity(const FusionTensor& n) {
    GenerationTree tree = generation_tree(n);
    std::vector<std::int64_t> acc(n.rank(), 0);
    for (std::size_t a = 0; a < tree.generators.size(); ++a)
        for (std::size_t b = a + 1; b < tree.generators.size(); ++b)
            if (!matrices_commute(n, tree.generators[a], tree.generators[b], acc))
                return "generator matrices do not commute: " +
                       describe_pair(n, tree.generators[a], tree.generators[b]);
    return check_tree_associativity(n, tree);
}

std::string check_fusion_commutativity_direct(const FusionTensor& n) {
    std::vector<std::int64_t> acc(n.rank(), 0);
    for (std::size_t a = 1; a < n.rank(); ++a)
        for (std::size_t b = a + 1; b < n.rank(); ++b)
            if (!matrices_commute(n, a, b, acc)) return "fusion matrices do not commute: " + describe_pair(n, a, b);
    return {};
}

std::vector<mpz_class> characteristic_polynomial(const std::vector<std::int64_t>& m, std::size_t n) {
    if (m.size() != n * n) throw ArgumentError("characteristic_polynomial: matrix is not square");
    // Reduce to upper Hessenberg form over Q, then run the standard recurrence.
    std::vector<mpq_class> h(m.begin(), m.end());
    auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return h[i * n + j]; };
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, c + 1));
        }
        for (std::size_t i = c + 2; i < n; ++i) {
            if (at(i, c) == 0) continue;
            mpq_class f = at(i, c) / at(c + 1, c);
            for (std::size_t j = 0; j < n; ++j) at(i, j) -= f * at(c + 1, j);
            for (std::size_t k = 0; k < n; ++k) at(k, c + 1) += f * at(k, i);
        }
    }
    // p_k(x) = det(x I - H_k) for the leading k x k block.
    std::vector<std::vector<mpq_class>> p(n + 1);
    p[0] = {mpq_class(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<mpq_class> cur(k + 1, mpq_class(0));
        for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
            cur[t + 1] += p[k - 1][t];
            cur[t] -= at(k - 1, k - 1) * p[k - 1][t];
        }
        mpq_class prod = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            prod *= at(i + 1, i);
            if (prod == 0) break;
            mpq_class f = prod * at(i, k - 1);
            for (std::size_t t = 0; t < p[i].size(); ++t) cur[t] -= f * p[i][t];
        }
        p[k] = std::move(cur);
    }
    std::vector<mpz_class> out;
    for (auto& c : p[n]) {
        if (c.get_den() != 1) throw InvariantViolation("characteristic polynomial is not integral");
        out.push_back(c.get_num());
    }
    return out;
}

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

// gcd degree over Z/p; returns -1 if p divides a leading coefficient.
long gcd_degree_mod(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g, unsigned long p) {
    auto reduce = [p](const std::vector<mpz_class>& v) {
        std::vector<unsigned long> out;
        for (const auto& c : v) {
            mpz_class t = c % p;
            if (t < 0) t += p;
            out.push_back(t.get_ui());
        }
        return out;
    };
    auto a = reduce(f), b = reduce(g);
    if (a.back() == 0 || b.back() == 0) return -1;
    auto pow_mod = [p](unsigned long x, unsigned long e) {
        unsigned long r = 1;
        for (; e; e >>= 1, x = static_cast<unsigned long>(static_cast<unsigned __int128>(x) * x % p))
            if (e & 1) r = static_cast<unsigned long>(static_cast<unsigned __int128>(r) * x % p);
        return r;
    };
    auto strip = [](std::vector<unsigned long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        unsigned long inv = pow_mod(b.back(), p - 2);
        while (a.size() >= b.size()) {
            unsigned long fct = static_cast<unsigned long>(static_cast<unsigned __int128>(a.back()) * inv % p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + p - static_cast<unsigned long>(
                                                    static_cast<unsigned __int128>(fct) * b[i] % p)) % p;
            strip(a);
        }
        std::swap(a, b);
    }
    return static_cast<long>(a.size()) - 1;
}

} // namespace

bool fusion_determined_by_one_matrix(const FusionTensor& n, std::size_t i) {
    if (i >= n.rank()) throw LabelError("fusion_determined_by_one_matrix: label index out of range");
    auto chi = characteristic_polynomial(n.matrix(i), n.rank());
    if (chi.size() <= 2) return true;
    std::vector<mpz_class> deriv;
    for (std::size_t t = 1; t < chi.size(); ++t) deriv.push_back(chi[t] * static_cast<unsigned long>(t));
    // A unit gcd modulo a prime not dividing the leading terms already proves it over Q.
    for (unsigned long p : {2147483647UL, 2147483629UL, 2147483587UL})
        if (gcd_degree_mod(chi, deriv, p) == 0) return true;
    Poly a(chi.begin(), chi.end()), b(deriv.begin(), deriv.end());
    while (!b.empty()) {
        Poly rem = poly_mod(a, b);
        a = std::move(b);
        b = std::move(rem);
    }
    return a.size() == 1;
}

} // namespace qgcat::category
