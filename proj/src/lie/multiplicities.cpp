#include "qgcat/lie/multiplicities.hpp"

#include "qgcat/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace qgcat::lie {

namespace {

Rational height_below(const RootSystem& rs, const Weight& top, const Weight& w) {
    Rational h(0);
    for (const Rational& c : rs.simple_coordinates(top - w)) h += c;
    return h;
}

} // namespace

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    std::vector<Weight> orbit{w};
    std::unordered_set<Weight, WeightHash> seen{w};
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (int i = 0; i < rs.rank(); ++i) {
            if (orbit[k][i] == 0) continue;
            Weight v = rs.reflect(orbit[k], i);
            if (seen.insert(v).second) orbit.push_back(v);
        }
    return orbit;
}

WeightSystem::WeightSystem(const RootSystem& rs, const Weight& highest) : rs_(&rs), highest_(highest) {
    if (highest.rank() != rs.rank()) throw ArgumentError("weight rank mismatch in weight_multiplicities");
    if (!highest.is_dominant()) throw ArgumentError("weight_multiplicities expects a dominant weight, got " + highest.str());

    // Dominant weights below mu: closed under subtracting positive roots while staying dominant.
    std::vector<Weight> doms{highest};
    std::unordered_set<Weight, WeightHash> seen{highest};
    for (std::size_t k = 0; k < doms.size(); ++k)
        for (const Root& a : rs.positive_roots()) {
            Weight v = doms[k] - a.weight;
            if (v.is_dominant() && seen.insert(v).second) doms.push_back(v);
        }
    std::vector<std::pair<Rational, Weight>> ordered;
    ordered.reserve(doms.size());
    for (const Weight& w : doms) ordered.emplace_back(height_below(rs, highest, w), w);
    std::sort(ordered.begin(), ordered.end());

    const Weight rho = rs.rho();
    const std::int64_t top = rs.scaled_inner(highest + rho, highest + rho);
    for (const auto& [h, nu] : ordered) {
        std::int64_t mult = 1;
        if (h != 0) {
            std::int64_t acc = 0;
            for (const Root& a : rs.positive_roots()) {
                Weight w = nu;
                for (;;) {
                    w += a.weight;
                    auto it = dom_index_.find(rs.to_dominant(w));
                    if (it == dom_index_.end()) break;
                    acc += it->second * rs.scaled_inner(w, a.weight);
                }
            }
            const std::int64_t gap = top - rs.scaled_inner(nu + rho, nu + rho);
            if (gap <= 0 || (2 * acc) % gap != 0)
                throw InvariantViolation("Freudenthal recursion is not integral at " + nu.str());
            mult = 2 * acc / gap;
        }
        if (mult > 0) {
            dom_index_.emplace(nu, mult);
            dominant_.emplace_back(nu, mult);
        }
    }
}

std::vector<std::pair<Weight, std::int64_t>> WeightSystem::all() const {
    std::vector<std::pair<Weight, std::int64_t>> out;
    for (const auto& [w, m] : dominant_)
        for (const Weight& v : weyl_orbit(*rs_, w)) out.emplace_back(v, m);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t WeightSystem::multiplicity(const Weight& w) const {
    auto it = dom_index_.find(rs_->to_dominant(w));
    return it == dom_index_.end() ? 0 : it->second;
}

std::int64_t WeightSystem::dimension() const {
    std::int64_t total = 0;
    for (const auto& [w, m] : dominant_) total += m * static_cast<std::int64_t>(weyl_orbit(*rs_, w).size());
    return total;
}

std::unordered_map<Weight, std::int64_t, WeightHash> weight_multiplicities(const RootSystem& rs, const Weight& mu) {
    WeightSystem ws(rs, mu);
    std::unordered_map<Weight, std::int64_t, WeightHash> out;
    for (auto& [w, m] : ws.all()) out.emplace(w, m);
    return out;
}

mpz_class weyl_dimension(const RootSystem& rs, const Weight& mu) {
    const Weight shifted = mu + rs.rho();
    mpz_class num = 1, den = 1;
    for (const Root& a : rs.positive_roots()) {
        num *= static_cast<long>(rs.pair_with_root(shifted, a));
        den *= static_cast<long>(rs.pair_with_root(rs.rho(), a));
    }
    return num / den;
}

} // namespace qgcat::lie
