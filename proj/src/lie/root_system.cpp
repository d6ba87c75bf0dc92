#include "qgcat/lie/root_system.hpp"

#include "qgcat/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace qgcat::lie {

namespace {

struct Diagram {
    std::vector<int> half_norm;
    std::vector<std::pair<int, int>> edges;
};

Diagram dynkin(const LieType& t) {
    const int r = t.rank();
    Diagram g;
    g.half_norm.assign(static_cast<std::size_t>(r), 1);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) g.edges.emplace_back(i, i + 1);
    };
    switch (t.family()) {
    case Family::A: chain(r); break;
    case Family::B:
        chain(r);
        std::fill(g.half_norm.begin(), g.half_norm.end() - 1, 2);
        break;
    case Family::C:
        chain(r);
        g.half_norm.back() = 2;
        break;
    case Family::D:
        chain(r - 1);
        g.edges.emplace_back(r - 3, r - 1);
        break;
    case Family::E:
        g.edges.emplace_back(0, 2);
        g.edges.emplace_back(1, 3);
        for (int i = 2; i + 1 < r; ++i) g.edges.emplace_back(i, i + 1);
        break;
    case Family::F:
        chain(4);
        g.half_norm = {2, 2, 1, 1};
        break;
    case Family::G:
        chain(2);
        g.half_norm = {1, 3};
        break;
    }
    return g;
}

std::vector<Rational> invert(const std::vector<int>& a, int n) {
    std::vector<Rational> m(static_cast<std::size_t>(n * 2 * n));
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i * 2 * n + j)]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = a[static_cast<std::size_t>(i * n + j)];
        at(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (at(p, c) == 0) ++p;
        if (p != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
        Rational inv = 1 / at(c, c);
        for (int j = 0; j < 2 * n; ++j) at(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || at(i, c) == 0) continue;
            Rational f = at(i, c);
            for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
        }
    }
    std::vector<Rational> out(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = at(i, n + j);
    return out;
}

} // namespace

int Root::height() const { return std::accumulate(simple.begin(), simple.end(), 0); }

RootSystem::RootSystem(LieType type) : type_(type), rank_(type.rank()) {
    if (rank_ > Weight::max_rank) throw ConfigurationError("rank " + std::to_string(rank_) + " is not supported");
    const int r = rank_;
    Diagram g = dynkin(type_);
    half_norm_ = g.half_norm;
    m_ = *std::max_element(half_norm_.begin(), half_norm_.end());

    // Symmetrised matrix B_ij = <alpha_i, alpha_j> and Cartan matrix A_ij = B_ij / D_i.
    std::vector<int> b(static_cast<std::size_t>(r * r), 0);
    for (int i = 0; i < r; ++i) b[idx(i, i)] = 2 * half_norm_[static_cast<std::size_t>(i)];
    for (auto [i, j] : g.edges) {
        int v = -std::max(half_norm_[static_cast<std::size_t>(i)], half_norm_[static_cast<std::size_t>(j)]);
        b[idx(i, j)] = v;
        b[idx(j, i)] = v;
    }
    cartan_.resize(b.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cartan_[idx(i, j)] = b[idx(i, j)] / half_norm_[static_cast<std::size_t>(i)];

    // Gram matrix of the fundamental weights: diag(D) A^{-1}; d clears its denominators.
    cartan_inv_ = invert(cartan_, r);
    std::int64_t den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational gij = cartan_inv_[idx(i, j)] * half_norm_[static_cast<std::size_t>(i)];
            den = std::lcm(den, gij.get_den().get_si());
        }
    d_ = static_cast<int>(den);
    gram_d_.resize(b.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational gij = cartan_inv_[idx(i, j)] * half_norm_[static_cast<std::size_t>(i)] * den;
            gram_d_[idx(i, j)] = gij.get_num().get_si();
        }

    // Positive roots by root strings, processed in order of height.
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.emplace(e, roots.size());
        roots.push_back(e);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        for (int i = 0; i < r; ++i) {
            std::vector<int> beta = roots[k];
            int pairing = 0;
            for (int j = 0; j < r; ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan_[idx(i, j)];
            int p = 0;
            std::vector<int> down = beta;
            while (true) {
                down[static_cast<std::size_t>(i)] -= 1;
                if (!seen.count(down)) break;
                ++p;
            }
            if (p - pairing > 0) {
                beta[static_cast<std::size_t>(i)] += 1;
                if (!seen.count(beta)) {
                    seen.emplace(beta, roots.size());
                    roots.push_back(beta);
                }
            }
        }
    }
    if (static_cast<int>(roots.size()) != type_.positive_root_count())
        throw InvariantViolation("root generation produced " + std::to_string(roots.size()) + " positive roots for " +
                                 type_.name());

    positive_.reserve(roots.size());
    for (auto& c : roots) {
        Root root;
        root.simple = c;
        root.weight = Weight(r);
        int norm = 0;
        for (int j = 0; j < r; ++j) {
            for (int i = 0; i < r; ++i) root.weight[i] += c[static_cast<std::size_t>(j)] * cartan_[idx(i, j)];
            for (int k = 0; k < r; ++k) norm += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k)] * b[idx(j, k)];
        }
        root.norm = norm;
        positive_.push_back(std::move(root));
    }
    int best = -1, best_short = -1;
    for (std::size_t k = 0; k < positive_.size(); ++k) {
        int h = positive_[k].height();
        if (h > best) best = h, highest_ = k;
        if (positive_[k].norm == 2 && h > best_short) best_short = h, highest_short_ = k;
    }
}

void RootSystem::check(const Weight& w) const {
    if (w.rank() != rank_)
        throw ArgumentError("weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", expected " +
                            std::to_string(rank_));
}

Weight RootSystem::rho() const {
    Weight w(rank_);
    for (int& x : w) x = 1;
    return w;
}

Weight RootSystem::fundamental(int i) const {
    if (i < 0 || i >= rank_) throw ArgumentError("fundamental weight index out of range");
    Weight w(rank_);
    w[i] = 1;
    return w;
}

int RootSystem::dual_coxeter() const noexcept {
    const Root& t = highest_root();
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += t.simple[static_cast<std::size_t>(i)] * half_norm_[static_cast<std::size_t>(i)];
    return 1 + s / m_;
}

std::int64_t RootSystem::scaled_inner(const Weight& a, const Weight& b) const {
    check(a);
    check(b);
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        std::int64_t row = 0;
        for (int j = 0; j < rank_; ++j) row += gram_d_[idx(i, j)] * b[j];
        s += a[i] * row;
    }
    return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const { return rational(scaled_inner(a, b), d_); }

Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b) { return rs.inner(a, b); }

std::int64_t RootSystem::pair_with_root(const Weight& w, const Root& beta) const {
    check(w);
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i)
        s += static_cast<std::int64_t>(w[i]) * beta.simple[static_cast<std::size_t>(i)] * half_norm_[static_cast<std::size_t>(i)];
    return s;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
    check(w);
    Weight out = w;
    const int c = w[i];
    for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[idx(j, i)];
    return out;
}

Weight RootSystem::to_dominant(const Weight& w, int* sign) const {
    check(w);
    Weight x = w;
    int s = 1;
    for (;;) {
        int i = 0;
        while (i < rank_ && x[i] >= 0) ++i;
        if (i == rank_) break;
        const int c = x[i];
        for (int j = 0; j < rank_; ++j) x[j] -= c * cartan_[idx(j, i)];
        s = -s;
    }
    if (sign) *sign = s;
    return x;
}

Weight RootSystem::dual(const Weight& w) const {
    if (!w.is_dominant()) throw ArgumentError("dual_label expects a dominant weight, got " + w.str());
    return to_dominant(-w);
}

std::vector<Rational> RootSystem::simple_coordinates(const Weight& w) const {
    check(w);
    // alpha = A lambda in coordinates, so lambda = A^{-1} alpha column-wise: w = sum_j c_j col_j(A).
    std::vector<Rational> c(static_cast<std::size_t>(rank_), Rational(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) c[static_cast<std::size_t>(i)] += cartan_inv_[idx(i, j)] * w[j];
    return c;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
    for (const Rational& c : simple_coordinates(w))
        if (c.get_den() != 1) return false;
    return true;
}

bool RootSystem::has_epsilon_coordinates() const noexcept {
    auto f = type_.family();
    return f == Family::B || f == Family::C || f == Family::D;
}

std::vector<Rational> RootSystem::epsilon_coordinates(const Weight& w) const {
    check(w);
    if (!has_epsilon_coordinates()) throw ScopeError("epsilon coordinates are only defined for types B, C, D");
    const int r = rank_;
    std::vector<Rational> e(static_cast<std::size_t>(r), Rational(0));
    switch (type_.family()) {
    case Family::B:
        for (int k = 0; k < r; ++k) {
            Rational s = rational(w[r - 1], 2);
            for (int i = k; i < r - 1; ++i) s += w[i];
            e[static_cast<std::size_t>(k)] = s;
        }
        break;
    case Family::C:
        for (int k = 0; k < r; ++k) {
            Rational s(0);
            for (int i = k; i < r; ++i) s += w[i];
            e[static_cast<std::size_t>(k)] = s;
        }
        break;
    default: // D
        for (int k = 0; k < r - 1; ++k) {
            Rational s = rational(w[r - 2] + w[r - 1], 2);
            for (int i = k; i < r - 2; ++i) s += w[i];
            e[static_cast<std::size_t>(k)] = s;
        }
        e[static_cast<std::size_t>(r - 1)] = rational(w[r - 1] - w[r - 2], 2);
        break;
    }
    return e;
}

Weight RootSystem::from_epsilon(const std::vector<Rational>& eps) const {
    if (!has_epsilon_coordinates()) throw ScopeError("epsilon coordinates are only defined for types B, C, D");
    const int r = rank_;
    if (static_cast<int>(eps.size()) != r) throw ArgumentError("epsilon vector has wrong length");
    std::vector<Rational> a(static_cast<std::size_t>(r));
    auto e = [&](int k) { return eps[static_cast<std::size_t>(k)]; };
    for (int i = 0; i + 1 < r; ++i) a[static_cast<std::size_t>(i)] = e(i) - e(i + 1);
    switch (type_.family()) {
    case Family::B: a[static_cast<std::size_t>(r - 1)] = 2 * e(r - 1); break;
    case Family::C: a[static_cast<std::size_t>(r - 1)] = e(r - 1); break;
    default:
        a[static_cast<std::size_t>(r - 1)] = e(r - 2) + e(r - 1);
        break;
    }
    Weight w(r);
    for (int i = 0; i < r; ++i) {
        if (a[static_cast<std::size_t>(i)].get_den() != 1)
            throw ArgumentError("epsilon vector is not an integral weight");
        w[i] = static_cast<int>(a[static_cast<std::size_t>(i)].get_num().get_si());
    }
    return w;
}

} // namespace qgcat::lie
