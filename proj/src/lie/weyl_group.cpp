#include "qgcat/lie/weyl_group.hpp"

#include "qgcat/error.hpp"

#include <unordered_set>

namespace qgcat::lie {

Weight WeylElement::apply(const Weight& w) const {
    const int r = w.rank();
    Weight out(r);
    for (int i = 0; i < r; ++i) {
        int s = 0;
        for (int j = 0; j < r; ++j) s += matrix[static_cast<std::size_t>(i * r + j)] * w[j];
        out[i] = s;
    }
    return out;
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::uint64_t limit) {
    const std::uint64_t order = rs.weyl_order();
    if (order > limit)
        throw CapacityError("Weyl group of " + rs.type().name() + " has " + std::to_string(order) +
                            " elements, above the limit " + std::to_string(limit));
    const int r = rs.rank();
    // Elements are identified by their image of rho, which has trivial stabiliser.
    std::vector<WeylElement> out;
    out.reserve(static_cast<std::size_t>(order));
    std::unordered_set<Weight, WeightHash> seen;
    WeylElement id;
    id.matrix.assign(static_cast<std::size_t>(r * r), 0);
    for (int i = 0; i < r; ++i) id.matrix[static_cast<std::size_t>(i * r + i)] = 1;
    seen.insert(rs.rho());
    out.push_back(std::move(id));
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int s = 0; s < r; ++s) {
            // s_s * w: row j of the product subtracts cartan(j, s) times row s.
            WeylElement next;
            next.matrix = out[k].matrix;
            for (int j = 0; j < r; ++j) {
                const int c = rs.cartan(j, s);
                if (c == 0 || j == s) continue;
                for (int t = 0; t < r; ++t)
                    next.matrix[static_cast<std::size_t>(j * r + t)] -= c * out[k].matrix[static_cast<std::size_t>(s * r + t)];
            }
            for (int t = 0; t < r; ++t) next.matrix[static_cast<std::size_t>(s * r + t)] *= -1;
            Weight image(r);
            for (int i = 0; i < r; ++i) {
                int v = 0;
                for (int t = 0; t < r; ++t) v += next.matrix[static_cast<std::size_t>(i * r + t)];
                image[i] = v;
            }
            if (!seen.insert(image).second) continue;
            next.length = out[k].length + 1;
            next.sign = -out[k].sign;
            out.push_back(std::move(next));
        }
    }
    if (out.size() != order)
        throw InvariantViolation("Weyl enumeration found " + std::to_string(out.size()) + " elements, expected " +
                                 std::to_string(order));
    return out;
}

} // namespace qgcat::lie
