#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qgcat::lie {

using Rational = mpq_class;

// n/d in lowest terms (mpq_class does not canonicalise on construction).
inline Rational rational(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// An integral weight in the fundamental-weight basis. Storage is inline so that
// the folding and multiplicity loops never allocate.
class Weight {
  public:
    static constexpr int max_rank = 8;

    Weight() = default;
    explicit Weight(int rank);
    Weight(std::initializer_list<int> coords);
    explicit Weight(std::span<const int> coords);

    int rank() const noexcept { return rank_; }
    int operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }

    const int* begin() const noexcept { return c_.data(); }
    const int* end() const noexcept { return c_.data() + rank_; }
    int* begin() noexcept { return c_.data(); }
    int* end() noexcept { return c_.data() + rank_; }
    std::span<const int> coords() const noexcept { return {c_.data(), static_cast<std::size_t>(rank_)}; }
    std::vector<int> to_vector() const { return {begin(), end()}; }

    bool is_zero() const noexcept;
    bool is_dominant() const noexcept;

    Weight& operator+=(const Weight& o) noexcept;
    Weight& operator-=(const Weight& o) noexcept;
    Weight& operator*=(int k) noexcept;
    friend Weight operator+(Weight a, const Weight& b) noexcept { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) noexcept { return a -= b; }
    friend Weight operator*(int k, Weight a) noexcept { return a *= k; }
    Weight operator-() const noexcept;

    friend bool operator==(const Weight& a, const Weight& b) noexcept;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) noexcept;

    std::string str() const;

  private:
    std::array<int, max_rank> c_{};
    int rank_ = 0;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

// Weight with a sign from {+1, -1, 0}; sign 0 means the affine fold landed on a wall.
struct SignedWeight {
    Weight weight;
    int sign = 0;
    friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

} // namespace qgcat::lie
