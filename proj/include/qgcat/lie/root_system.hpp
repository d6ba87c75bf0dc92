#pragma once

#include "qgcat/lie/lie_type.hpp"
#include "qgcat/lie/weight.hpp"

#include <cstdint>
#include <vector>

namespace qgcat::lie {

struct Root {
    std::vector<int> simple; // coordinates in the simple-root basis
    Weight weight;           // coordinates in the fundamental-weight basis
    int norm = 0;            // <beta, beta>; 2 for short roots
    int height() const;
};

// Root datum of a simple Lie algebra, Bourbaki numbering, with the form
// normalised so that short roots have squared length 2.
class RootSystem {
  public:
    explicit RootSystem(LieType type);

    const LieType& type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }

    // cartan(i, j) = <alpha_i^vee, alpha_j>; column j holds alpha_j in fundamental coordinates.
    int cartan(int i, int j) const noexcept { return cartan_[idx(i, j)]; }
    // <alpha_i, alpha_i> / 2, i.e. 1 for short roots and m for long ones.
    int half_norm(int i) const noexcept { return half_norm_[static_cast<std::size_t>(i)]; }

    const std::vector<Root>& positive_roots() const noexcept { return positive_; }
    const Root& simple_root(int i) const { return positive_[static_cast<std::size_t>(i)]; }
    const Root& highest_root() const noexcept { return positive_[highest_]; }
    const Root& highest_short_root() const noexcept { return positive_[highest_short_]; }

    Weight zero() const { return Weight(rank_); }
    Weight rho() const;
    Weight fundamental(int i) const;

    int length_ratio() const noexcept { return m_; } // m
    int galois_d() const noexcept { return d_; }      // d
    int dual_coxeter() const noexcept;

    // Exact form and its d-scaled integer version, d <lambda, mu>.
    Rational inner(const Weight& a, const Weight& b) const;
    std::int64_t scaled_inner(const Weight& a, const Weight& b) const;
    std::int64_t scaled_gram(int i, int j) const noexcept { return gram_d_[idx(i, j)]; }
    Rational gram(int i, int j) const { return rational(gram_d_[idx(i, j)], d_); }

    // <lambda, beta> for a root beta, always an integer in this normalisation.
    std::int64_t pair_with_root(const Weight& w, const Root& beta) const;

    Weight reflect(const Weight& w, int i) const;
    // Dominant representative of the W-orbit together with (-1)^length of
    // the reflecting element.
    Weight to_dominant(const Weight& w, int* sign = nullptr) const;
    Weight dual(const Weight& w) const; // -w0(lambda)

    // Coordinates of w in the simple-root basis (rational in general).
    std::vector<Rational> simple_coordinates(const Weight& w) const;
    bool in_root_lattice(const Weight& w) const;

    // Orthogonal epsilon coordinates for types B, C, D.
    bool has_epsilon_coordinates() const noexcept;
    std::vector<Rational> epsilon_coordinates(const Weight& w) const;
    // Inverse of epsilon_coordinates; throws if the vector is not an integral weight.
    Weight from_epsilon(const std::vector<Rational>& eps) const;

    // Number of positive roots and the Weyl order as classical formulas.
    std::uint64_t weyl_order() const { return type_.weyl_order(); }

  private:
    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j);
    }
    void check(const Weight& w) const;

    LieType type_;
    int rank_;
    int m_ = 1;
    int d_ = 1;
    std::vector<int> cartan_;
    std::vector<int> half_norm_;
    std::vector<Rational> cartan_inv_;
    std::vector<std::int64_t> gram_d_;
    std::vector<Root> positive_;
    std::size_t highest_ = 0;
    std::size_t highest_short_ = 0;
};

// Convenience form matching the operation name used in the docs.
inline RootSystem build_root_system(LieType t) { return RootSystem(t); }
Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b);

} // namespace qgcat::lie
