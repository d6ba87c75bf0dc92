#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qgcat::lie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Lie type. Aliases are rejected: B1, C1 (= A1) and D1, D2 (not simple
// or reducible), so every category is reachable from exactly one name.
class LieType {
  public:
    LieType(Family family, int rank);

    // Accepts "A1", "b3", "E8", ...
    static LieType parse(std::string_view text);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::string name() const;

    bool simply_laced() const noexcept {
        return family_ == Family::A || family_ == Family::D || family_ == Family::E;
    }

    // Classical order of the Weyl group, saturating at UINT64_MAX.
    std::uint64_t weyl_order() const;

    // Number of positive roots.
    int positive_root_count() const;

    friend bool operator==(const LieType&, const LieType&) = default;

  private:
    Family family_;
    int rank_;
};

} // namespace qgcat::lie
