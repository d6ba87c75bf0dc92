#include "qgcat/rank/rank_gen.hpp"

#include "qgcat/error.hpp"

#include <algorithm>

namespace qgcat::rank {

using lie::Family;

namespace {

int length_ratio(const lie::LieType& t) {
    if (t.family() == Family::G) return 3;
    return t.simply_laced() ? 1 : 2;
}

std::vector<int> parts_of(std::initializer_list<int> head, int fill, int total) {
    std::vector<int> p(head);
    while (static_cast<int>(p.size()) < total) p.push_back(fill);
    return p;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw CapacityError("partition count exceeds 64 bits");
    return out;
}

std::vector<std::uint64_t> partitions(const std::vector<int>& parts, int n) {
    if (n < 0) throw ArgumentError("partition bound must be nonnegative");
    std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k : parts) {
        if (k <= 0) throw ArgumentError("partition parts must be positive");
        for (int s = k; s <= n; ++s) p[static_cast<std::size_t>(s)] = checked_add(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s - k)]);
    }
    return p;
}

} // namespace

RankSpec tabulated_rank_spec(const lie::LieType& t, int ell_m) {
    const int r = t.rank();
    const int m = length_ratio(t);
    if (ell_m != 0 && ell_m != 1) throw ArgumentError("ell_m must be 0 or 1");
    if (m == 1 && ell_m == 1) throw ArgumentError(t.name() + " has m = 1, so every level has ell_m = 0");
    const bool odd = ell_m == 1; // m != 2 only for G below
    switch (t.family()) {
    case Family::A: return {std::vector<int>(static_cast<std::size_t>(r), 1), r + 1, 0};
    case Family::B:
        if (odd) return {parts_of({1}, 2, r), 2 * r + 1, 1};
        return {parts_of({2, 2}, 4, r), 4 * r - 2, 0};
    case Family::C:
        if (odd) return {parts_of({1}, 2, r), 2 * r + 1, 1};
        return {std::vector<int>(static_cast<std::size_t>(r), 2), 2 * r + 2, 0};
    case Family::D: return {parts_of({1, 1, 1}, 2, r), 2 * r - 2, 0};
    case Family::E:
        if (r == 6) return {{1, 1, 2, 2, 2, 3}, 12, 0};
        if (r == 7) return {{1, 2, 2, 2, 3, 3, 4}, 18, 0};
        return {{2, 2, 3, 3, 4, 4, 5, 6}, 30, 0};
    case Family::F:
        if (odd) return {{2, 2, 3, 4}, 13, 1};
        return {{2, 4, 4, 6}, 18, 0};
    case Family::G:
        if (odd) return {{2, 3}, 7, 1};
        return {{3, 6}, 12, 0};
    }
    return {};
}

RankSpec derived_rank_spec(const lie::RootSystem& rs, int ell_m) {
    const int m = rs.length_ratio();
    if (m == 1 && ell_m == 1) throw ArgumentError(rs.type().name() + " has m = 1, so every level has ell_m = 0");
    const bool long_case = ell_m == 0;
    const lie::Root& theta = long_case ? rs.highest_root() : rs.highest_short_root();
    RankSpec out;
    out.ell_m = ell_m;
    int rho_height = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        const int mark = static_cast<int>(rs.pair_with_root(rs.fundamental(i), theta));
        out.parts.push_back(mark);
        rho_height += mark;
    }
    std::sort(out.parts.begin(), out.parts.end());
    int ell = rho_height + 1;
    while ((ell % m == 0) != long_case) ++ell;
    out.ell0 = ell;
    return out;
}

RankSpec rank_spec_for(const lie::LieType& t, int ell) {
    if (ell <= 0) throw LevelError("level must be positive");
    const int ell_m = ell % length_ratio(t) == 0 ? 0 : 1;
    RankSpec spec = tabulated_rank_spec(t, ell_m);
    if (ell < spec.ell0)
        throw LevelError("level " + std::to_string(ell) + " is below the minimal non-degenerate level " +
                         std::to_string(spec.ell0) + " for " + t.name());
    return spec;
}

std::uint64_t partition_count(const std::vector<int>& parts, int n) { return partitions(parts, n).back(); }

std::vector<std::uint64_t> series_upto(const std::vector<int>& parts, int s) {
    auto p = partitions(parts, s);
    for (std::size_t k = 1; k < p.size(); ++k) p[k] = checked_add(p[k], p[k - 1]);
    return p;
}

std::uint64_t partition_count_upto(const std::vector<int>& parts, int s) { return series_upto(parts, s).back(); }

std::uint64_t rank_by_gf(const lie::LieType& t, int ell) {
    const RankSpec spec = rank_spec_for(t, ell);
    const int m = length_ratio(t);
    const int n = ell - spec.ell0 + spec.ell_m;
    // With this normalisation the index is divisible by m exactly when ell is.
    if ((n % m == 0) != (ell % m == 0))
        throw ArgumentError("coefficient index " + std::to_string(n) + " violates the divisibility filter for " +
                            t.name() + " at level " + std::to_string(ell));
    return partition_count_upto(spec.parts, n);
}

} // namespace qgcat::rank
