#include "qgcat/lie/alcove.hpp"

#include "qgcat/error.hpp"

#include <algorithm>

namespace qgcat::lie {

Alcove::Alcove(const RootSystem& rs, int ell) : rs_(&rs), ell_(ell) {
    const int r = rs.rank();
    long_ = ell > 0 && ell % rs.length_ratio() == 0;
    const Root& t = theta();
    marks_.resize(static_cast<std::size_t>(r));
    rho_height_ = 0;
    for (int i = 0; i < r; ++i) {
        marks_[static_cast<std::size_t>(i)] = t.simple[static_cast<std::size_t>(i)] * rs.half_norm(i);
        rho_height_ += marks_[static_cast<std::size_t>(i)];
    }
    if (ell <= rho_height_)
        throw LevelError("level " + std::to_string(ell) + " is degenerate for " + rs.type().name() +
                         ": the alcove needs ell > " + std::to_string(rho_height_));

    const int budget = ell - 1 - rho_height_; // sum a_i marks_i <= budget
    bound_.resize(static_cast<std::size_t>(r));
    radix_.resize(static_cast<std::size_t>(r));
    int stride = 1;
    for (int i = r - 1; i >= 0; --i) {
        bound_[static_cast<std::size_t>(i)] = budget / marks_[static_cast<std::size_t>(i)] + 1;
        radix_[static_cast<std::size_t>(i)] = stride;
        stride *= bound_[static_cast<std::size_t>(i)];
    }
    lookup_.assign(static_cast<std::size_t>(stride), -1);

    Weight w(r);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == r) {
            labels_.push_back(w);
            return;
        }
        const int mk = marks_[static_cast<std::size_t>(i)];
        for (int a = 0; a * mk <= left; ++a) {
            w[i] = a;
            self(self, i + 1, left - a * mk);
        }
        w[i] = 0;
    };
    rec(rec, 0, budget);
    std::stable_sort(labels_.begin(), labels_.end(), [&](const Weight& a, const Weight& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        int pos = 0;
        for (int i = 0; i < r; ++i) pos += labels_[k][i] * radix_[static_cast<std::size_t>(i)];
        lookup_[static_cast<std::size_t>(pos)] = static_cast<int>(k);
    }
}

const Root& Alcove::theta() const noexcept { return long_ ? rs_->highest_root() : rs_->highest_short_root(); }

int Alcove::height(const Weight& w) const {
    int h = 0;
    for (int i = 0; i < w.rank(); ++i) h += (w[i] + 1) * marks_[static_cast<std::size_t>(i)];
    return h;
}

bool Alcove::contains(const Weight& w) const {
    return w.rank() == rs_->rank() && w.is_dominant() && height(w) < ell_;
}

std::optional<std::size_t> Alcove::index_of(const Weight& w) const {
    if (!contains(w)) return std::nullopt;
    int pos = 0;
    for (int i = 0; i < w.rank(); ++i) pos += w[i] * radix_[static_cast<std::size_t>(i)];
    return static_cast<std::size_t>(lookup_[static_cast<std::size_t>(pos)]);
}

int Alcove::fold_shifted(Weight x, std::size_t* index) const {
    const RootSystem& rs = *rs_;
    const int r = rs.rank();
    const Root& t = theta();
    const int t_half = t.norm / 2;
    int sign = 1;
    for (;;) {
        // Finite Weyl group: move x into the closed dominant chamber.
        for (;;) {
            int i = 0;
            while (i < r && x[i] > 0) ++i;
            if (i == r) break;
            if (x[i] == 0) return 0;
            const int c = x[i];
            for (int j = 0; j < r; ++j) x[j] -= c * rs.cartan(j, i);
            sign = -sign;
        }
        int h = 0;
        for (int i = 0; i < r; ++i) h += x[i] * marks_[static_cast<std::size_t>(i)];
        if (h < ell_) break;
        if (h == ell_) return 0;
        // Affine reflection in <x, theta> = ell.
        const int k = (h - ell_) / t_half;
        for (int i = 0; i < r; ++i) x[i] -= k * t.weight[i];
        sign = -sign;
    }
    if (index) {
        int pos = 0;
        for (int i = 0; i < r; ++i) pos += (x[i] - 1) * radix_[static_cast<std::size_t>(i)];
        *index = static_cast<std::size_t>(lookup_[static_cast<std::size_t>(pos)]);
    }
    return sign;
}

SignedWeight Alcove::fold(const Weight& lambda) const {
    if (lambda.rank() != rs_->rank()) throw ArgumentError("weight rank mismatch in affine_fold");
    std::size_t idx = 0;
    int s = fold_shifted(lambda + rs_->rho(), &idx);
    if (s == 0) return {lambda, 0};
    return {labels_[idx], s};
}

std::vector<Weight> enumerate_alcove(const RootSystem& rs, int ell) { return Alcove(rs, ell).labels(); }

SignedWeight affine_fold(const RootSystem& rs, int ell, const Weight& lambda) { return Alcove(rs, ell).fold(lambda); }

} // namespace qgcat::lie
