#include "qgcat/lie/lie_type.hpp"

#include "qgcat/error.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace qgcat::lie {

namespace {

bool valid_rank(Family f, int r) {
    switch (f) {
    case Family::A: return r >= 1;
    case Family::B:
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
    }
    return false;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f = sat_mul(f, static_cast<std::uint64_t>(k));
    return f;
}

std::uint64_t pow2(int n) {
    return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n);
}

} // namespace

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
    if (!valid_rank(family, rank))
        throw ConfigurationError("invalid rank " + std::to_string(rank) + " for type " +
                                 std::string(1, static_cast<char>(family)));
}

LieType LieType::parse(std::string_view text) {
    if (text.size() < 2) throw ConfigurationError("cannot parse Lie type '" + std::string(text) + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c < 'A' || c > 'G') throw ConfigurationError("unknown Lie family '" + std::string(1, text[0]) + "'");
    int rank = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ConfigurationError("cannot parse rank in '" + std::string(text) + "'");
    return LieType(static_cast<Family>(c), rank);
}

std::string LieType::name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

std::uint64_t LieType::weyl_order() const {
    const int r = rank_;
    switch (family_) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return sat_mul(pow2(r), factorial(r));
    case Family::D: return sat_mul(pow2(r - 1), factorial(r));
    case Family::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

int LieType::positive_root_count() const {
    const int r = rank_;
    switch (family_) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

} // namespace qgcat::lie
