#include "qgcat/lie/weight.hpp"

#include "qgcat/error.hpp"

#include <algorithm>

namespace qgcat::lie {

namespace {
void check_rank(std::size_t r) {
    if (r > static_cast<std::size_t>(Weight::max_rank))
        throw ArgumentError("weight rank " + std::to_string(r) + " exceeds " + std::to_string(Weight::max_rank));
}
} // namespace

Weight::Weight(int rank) : rank_(rank) {
    if (rank < 0) throw ArgumentError("negative weight rank");
    check_rank(static_cast<std::size_t>(rank));
}

Weight::Weight(std::initializer_list<int> coords) : Weight(std::span<const int>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const int> coords) {
    check_rank(coords.size());
    rank_ = static_cast<int>(coords.size());
    std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Weight::is_zero() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x >= 0; });
}

Weight& Weight::operator+=(const Weight& o) noexcept {
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) noexcept {
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight& Weight::operator*=(int k) noexcept {
    for (int i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
}

Weight Weight::operator-() const noexcept {
    Weight out = *this;
    for (int i = 0; i < rank_; ++i) out.c_[i] = -out.c_[i];
    return out;
}

bool operator==(const Weight& a, const Weight& b) noexcept {
    return a.rank_ == b.rank_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) noexcept {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string Weight::str() const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(w.rank());
    for (int x : w) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

} // namespace qgcat::lie
