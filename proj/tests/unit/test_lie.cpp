#include <doctest.h>

#include "oracle/lie_oracle.hpp"
#include "qgcat/error.hpp"
#include "qgcat/lie/alcove.hpp"
#include "qgcat/lie/multiplicities.hpp"
#include "qgcat/lie/tables.hpp"
#include "qgcat/lie/weyl_group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace qgcat;
using namespace qgcat::lie;

namespace {

std::vector<LieType> small_types() {
    return {LieType(Family::A, 1), LieType(Family::A, 2), LieType(Family::A, 3), LieType(Family::A, 4),
            LieType(Family::B, 2), LieType(Family::B, 3), LieType(Family::B, 4), LieType(Family::C, 2),
            LieType(Family::C, 3), LieType(Family::C, 4), LieType(Family::D, 3), LieType(Family::D, 4),
            LieType(Family::F, 4), LieType(Family::G, 2)};
}

std::vector<LieType> all_types() {
    auto t = small_types();
    for (int r : {5, 6, 7, 8}) {
        t.emplace_back(Family::A, r);
        t.emplace_back(Family::B, r);
        t.emplace_back(Family::C, r);
        t.emplace_back(Family::D, r);
    }
    for (int r : {6, 7, 8}) t.emplace_back(Family::E, r);
    return t;
}

} // namespace

TEST_CASE("lie type validation") {
    CHECK_THROWS_AS(LieType(Family::B, 1), ConfigurationError);
    CHECK_THROWS_AS(LieType(Family::C, 1), ConfigurationError);
    CHECK_THROWS_AS(LieType(Family::D, 2), ConfigurationError);
    CHECK_THROWS_AS(LieType(Family::E, 5), ConfigurationError);
    CHECK_THROWS_AS(LieType(Family::F, 3), ConfigurationError);
    CHECK_THROWS_AS(LieType(Family::G, 3), ConfigurationError);
    CHECK_THROWS_AS(LieType(Family::A, 0), ConfigurationError);
    CHECK_THROWS_AS(LieType::parse("X3"), ConfigurationError);
    CHECK_THROWS_AS(LieType::parse("A"), ConfigurationError);
    CHECK(LieType::parse("b3") == LieType(Family::B, 3));
    CHECK(LieType::parse("E8").name() == "E8");
}

TEST_CASE("root system invariants for every type") {
    for (const LieType& t : all_types()) {
        CAPTURE(t.name());
        RootSystem rs(t);
        CHECK(static_cast<int>(rs.positive_roots().size()) == t.positive_root_count());
        int short_norms = 0;
        for (const Root& a : rs.positive_roots()) {
            CHECK((a.norm == 2 || a.norm == 2 * rs.length_ratio()));
            short_norms += a.norm == 2;
            // <alpha, alpha> from the Gram matrix agrees with the root datum.
            CHECK(rs.inner(a.weight, a.weight) == a.norm);
        }
        CHECK(short_norms > 0);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                // <lambda_i, alpha_j^vee> = delta_ij
                Rational p = rs.inner(rs.fundamental(i), rs.simple_root(j).weight) * 2 / rs.simple_root(j).norm;
                CHECK(p == (i == j ? 1 : 0));
                CHECK(rs.gram(i, j) == rs.gram(j, i));
            }
        CHECK(rs.galois_d() == tabulated_galois_d(t));
        const int m = t.family() == Family::G ? 3 : t.simply_laced() ? 1 : 2;
        CHECK(rs.length_ratio() == m);
        if (t.simply_laced()) CHECK(rs.highest_root().simple == rs.highest_short_root().simple);
        else CHECK(rs.highest_root().simple != rs.highest_short_root().simple);
        CHECK(rs.highest_root().norm == 2 * m);
        CHECK(rs.highest_short_root().norm == 2);
        CHECK(rs.highest_root().weight.is_dominant());
        CHECK(rs.highest_short_root().weight.is_dominant());
    }
}

TEST_CASE("root system examples") {
    RootSystem a1(LieType(Family::A, 1));
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.inner(a1.simple_root(0).weight, a1.simple_root(0).weight) == 2);
    CHECK(a1.rho() == Weight{1});
    CHECK(a1.galois_d() == 2);
    CHECK(a1.inner(a1.fundamental(0), a1.fundamental(0)) == rational(1, 2));
    CHECK(a1.inner(a1.zero(), a1.rho()) == 0);

    RootSystem b2(LieType(Family::B, 2));
    CHECK(b2.length_ratio() == 2);
    CHECK(b2.positive_roots().size() == 4);
    CHECK(b2.highest_root().norm == 4);
    CHECK(b2.highest_short_root().norm == 2);
    CHECK(b2.inner(b2.rho(), b2.highest_root().weight) == 4);
    CHECK(b2.inner(b2.rho(), b2.highest_short_root().weight) == 3);
    CHECK(b2.dual_coxeter() == 3);

    RootSystem g2(LieType(Family::G, 2));
    CHECK(g2.length_ratio() == 3);
    CHECK(g2.galois_d() == 1);
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.dual_coxeter() == 4);

    CHECK_THROWS_AS(a1.inner(Weight{1, 0}, Weight{1}), ArgumentError);
}

TEST_CASE("epsilon coordinates reproduce the form") {
    for (const LieType& t : {LieType(Family::B, 2), LieType(Family::B, 3), LieType(Family::C, 3), LieType(Family::D, 4),
                             LieType(Family::D, 5)}) {
        CAPTURE(t.name());
        RootSystem rs(t);
        // Short roots have Euclidean length 1 in type B, so the form is twice the Euclidean one.
        const int scale = t.family() == Family::B ? 2 : 1;
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                auto a = rs.epsilon_coordinates(rs.fundamental(i));
                auto b = rs.epsilon_coordinates(rs.fundamental(j));
                Rational e(0);
                for (std::size_t k = 0; k < a.size(); ++k) e += a[k] * b[k];
                CHECK(e * scale == rs.gram(i, j));
            }
        Weight w(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) w[i] = i + 2;
        CHECK(rs.from_epsilon(rs.epsilon_coordinates(w)) == w);
    }
    RootSystem b2(LieType(Family::B, 2));
    // gamma = (5/2, 5/2) in epsilon coordinates
    CHECK(b2.from_epsilon({rational(5, 2), rational(5, 2)}) == Weight{0, 5});
    CHECK_THROWS_AS(RootSystem(LieType(Family::G, 2)).epsilon_coordinates(Weight{1, 0}), ScopeError);
}

TEST_CASE("weyl group enumeration matches the matrix closure") {
    for (const LieType& t : small_types()) {
        CAPTURE(t.name());
        RootSystem rs(t);
        auto els = weyl_elements(rs);
        CHECK(els.size() == t.weyl_order());
        auto closure = oracle::weyl_closure(rs);
        std::map<std::vector<int>, int> by_matrix(closure.begin(), closure.end());
        CHECK(by_matrix.size() == els.size());
        std::set<std::vector<int>> unique;
        for (const auto& e : els) {
            auto it = by_matrix.find(e.matrix);
            REQUIRE(it != by_matrix.end());
            CHECK(it->second == e.sign);
            unique.insert(e.matrix);
        }
        CHECK(unique.size() == els.size());
    }
    auto a1 = weyl_elements(RootSystem(LieType(Family::A, 1)));
    CHECK(a1.size() == 2);
    CHECK(a1[0].sign + a1[1].sign == 0);
    auto b2 = weyl_elements(RootSystem(LieType(Family::B, 2)));
    int sum = 0;
    for (auto& e : b2) sum += e.sign;
    CHECK(b2.size() == 8);
    CHECK(sum == 0);
    auto a2 = weyl_elements(RootSystem(LieType(Family::A, 2)));
    CHECK(std::count_if(a2.begin(), a2.end(), [](auto& e) { return e.sign == 1; }) == 3);
    CHECK_THROWS_AS(weyl_elements(RootSystem(LieType(Family::E, 7))), CapacityError);
    CHECK_THROWS_AS(weyl_elements(RootSystem(LieType(Family::A, 3)), 10), CapacityError);
}

TEST_CASE("dual labels") {
    RootSystem a2(LieType(Family::A, 2));
    CHECK(a2.dual(Weight{1, 0}) == Weight{0, 1});
    CHECK(a2.dual(a2.zero()) == a2.zero());
    RootSystem b2(LieType(Family::B, 2));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) CHECK(b2.dual(Weight{a, b}) == Weight{a, b});
    RootSystem d5(LieType(Family::D, 5));
    CHECK(d5.dual(Weight{0, 0, 0, 1, 0}) == Weight{0, 0, 0, 0, 1});
    RootSystem e6(LieType(Family::E, 6));
    CHECK(e6.dual(Weight{1, 0, 0, 0, 0, 0}) == Weight{0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(a2.dual(Weight{-1, 0}), ArgumentError);
    for (const LieType& t : small_types()) {
        RootSystem rs(t);
        for (int ell : {rs.highest_root().height() * 3, 17}) {
            Alcove alc(rs, ell);
            for (const Weight& w : alc.labels()) {
                CHECK(rs.dual(rs.dual(w)) == w);
                CHECK(alc.contains(rs.dual(w)));
            }
        }
    }
}

TEST_CASE("alcove enumeration") {
    RootSystem a2(LieType(Family::A, 2));
    auto l = enumerate_alcove(a2, 4);
    REQUIRE(l.size() == 3);
    CHECK(l[0] == Weight{0, 0});
    CHECK(l[1] == Weight{0, 1});
    CHECK(l[2] == Weight{1, 0});
    CHECK(enumerate_alcove(RootSystem(LieType(Family::A, 1)), 2).size() == 1);
    CHECK(enumerate_alcove(RootSystem(LieType(Family::B, 2)), 9).size() == 12);
    CHECK_THROWS_AS(enumerate_alcove(a2, 3 - 1), LevelError);
    CHECK_THROWS_AS(enumerate_alcove(RootSystem(LieType(Family::B, 2)), 4), LevelError);
    CHECK_NOTHROW(enumerate_alcove(RootSystem(LieType(Family::B, 2)), 5));

    for (const LieType& t : small_types()) {
        RootSystem rs(t);
        for (int ell = 1; ell <= 14; ++ell) {
            CAPTURE(t.name());
            CAPTURE(ell);
            auto scan = oracle::alcove_scan(rs, ell);
            if (scan.empty()) {
                CHECK_THROWS_AS(Alcove(rs, ell), LevelError);
                continue;
            }
            Alcove alc(rs, ell);
            CHECK(alc.labels().front().is_zero());
            std::set<Weight> a(alc.labels().begin(), alc.labels().end()), b(scan.begin(), scan.end());
            CHECK(a == b);
            CHECK(a.size() == alc.size());
            for (std::size_t k = 0; k < alc.size(); ++k) CHECK(*alc.index_of(alc.labels()[k]) == k);
            for (std::size_t k = 1; k < alc.size(); ++k)
                CHECK(alc.height(alc.labels()[k - 1]) <= alc.height(alc.labels()[k]));
        }
    }
}

TEST_CASE("affine fold against the breadth-first oracle") {
    std::mt19937 rng(7);
    for (const LieType& t : small_types()) {
        RootSystem rs(t);
        for (int ell : {2 * rs.dual_coxeter() + 2, 2 * rs.dual_coxeter() + 3}) {
            if (oracle::alcove_scan(rs, ell).empty()) continue;
            Alcove alc(rs, ell);
            CAPTURE(t.name());
            CAPTURE(ell);
            for (const Weight& w : alc.labels()) CHECK(alc.fold(w) == SignedWeight{w, 1});
            const int span = rs.rank() <= 2 ? ell : 4;
            std::uniform_int_distribution<int> coord(-span, span);
            for (int trial = 0; trial < 25; ++trial) {
                Weight w(rs.rank());
                for (int& x : w) x = coord(rng);
                auto [target, sign] = oracle::fold_bfs(rs, ell, w);
                SignedWeight got = alc.fold(w);
                CHECK(got.sign == sign);
                if (sign != 0) CHECK(got.weight == target);
                // The fold is constant on dot orbits up to the sign of the moving element.
                for (int i = 0; i < rs.rank(); ++i) {
                    Weight moved = rs.reflect(w + rs.rho(), i) - rs.rho();
                    SignedWeight again = alc.fold(moved);
                    CHECK(again.sign == -got.sign);
                    if (got.sign != 0) CHECK(again.weight == got.weight);
                }
            }
        }
    }
    // A weight on the affine wall folds to zero.
    RootSystem b2(LieType(Family::B, 2));
    Alcove alc(b2, 9);
    Weight on_wall{0, 6}; // <(0,6)+rho, theta_1> = 2 + 7
    CHECK(alc.height(on_wall) == 9);
    CHECK(alc.fold(on_wall).sign == 0);
    // (1,5) is one affine reflection away from (0,5).
    CHECK(alc.fold(Weight{1, 5}) == SignedWeight{Weight{0, 5}, -1});
    CHECK(oracle::fold_bfs(b2, 9, Weight{1, 5}) == std::pair<Weight, int>{Weight{0, 5}, -1});
}

TEST_CASE("weight multiplicities") {
    RootSystem a2(LieType(Family::A, 2));
    auto adj = weight_multiplicities(a2, Weight{1, 1});
    CHECK(adj.at(Weight{0, 0}) == 2);
    std::int64_t dim = 0;
    for (auto& [w, m] : adj) dim += m;
    CHECK(dim == 8);
    RootSystem b2(LieType(Family::B, 2));
    auto vec = weight_multiplicities(b2, Weight{1, 0});
    CHECK(vec.size() == 5);
    for (auto& [w, m] : vec) CHECK(m == 1);
    CHECK_THROWS_AS(weight_multiplicities(a2, Weight{1, -1}), ArgumentError);

    std::mt19937 rng(11);
    for (const LieType& t : small_types()) {
        RootSystem rs(t);
        CAPTURE(t.name());
        std::uniform_int_distribution<int> coord(0, rs.rank() >= 4 ? 1 : 2);
        for (int trial = 0; trial < 20; ++trial) {
            Weight mu(rs.rank());
            for (int& x : mu) x = coord(rng);
            WeightSystem ws(rs, mu);
            CHECK(ws.multiplicity(mu) == 1);
            CHECK(mpz_class(static_cast<long>(ws.dimension())) == weyl_dimension(rs, mu));
            if (trial < 3 && rs.rank() <= 3) {
                for (auto& [w, m] : ws.dominant()) CHECK(oracle::kostant_multiplicity(rs, mu, w) == m);
                // A dominant weight outside the support gets multiplicity zero from Kostant.
                Weight above = mu + rs.rho();
                CHECK(oracle::kostant_multiplicity(rs, mu, above) == 0);
            }
        }
    }
}
