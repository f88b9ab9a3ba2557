#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace testing;

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(Tower(1, {lex({1})}), ValueError);
  CHECK_THROWS_AS(Tower(2, {lex({1, 0})}), ValueError);
  CHECK_THROWS_AS(Tower(2, {lex({1, 0}), lex({0, 0})}), ValueError);
  CHECK_THROWS_AS(Tower(2, {lex({1, 0}), lex({1})}), ValueError);
}

TEST_CASE("lex tower: constant center x") {
  Tower t = nonarchimedean_tower();
  CHECK(t.center_history(6) == std::vector<std::size_t>(6, 0));
  CHECK(t.parameter(3, 0) == mono({1, 0, 0}));
  CHECK(t.parameter(3, 1) == mono({-3, 1, 0}));
  CHECK(t.parameter(3, 2) == mono({-3, 0, 1}));
  CHECK(t.frame_exponent(3, mono({0, 1, 0})) == make_exponents({3, 1, 0}));
  CHECK(t.ord(2, mono({0, 1, 0})) == 3);
  CHECK(t.member(5, mono({-5, 1, 0})));
  CHECK_FALSE(t.member(4, mono({-5, 1, 0})));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(t.member(i, mono({0, 0, 0})));
    CHECK_FALSE(t.direction_change(i, i + 1));
  }
  CHECK_FALSE(t.direction_change(0, 7));
}

TEST_CASE("archimedean tower: centers, ord and direction change") {
  Tower t = archimedean_tower();
  CHECK(t.center_history(5) == std::vector<std::size_t>{0, 1, 1, 0, 0});
  CHECK(t.ord(2, mono({1, 0, 0})) == 2);
  CHECK(t.ord(2, mono({0, 1, 0})) == 3);
  CHECK(t.ord(2, mono({0, 0, 1})) == 4);
  CHECK(t.frame_exponent(4, mono({-1, -1, 1})) == make_exponents({-1, -1, 1}));
  CHECK_FALSE(t.direction_change(0, 1));
  CHECK(t.direction_change(0, 2));
  for (std::size_t i = 0; i <= 60; ++i) CHECK_FALSE(t.member(i, mono({-1, -1, 1})));
  // Deep weights have large cancelling coefficients.
  for (const auto& w : t.frame(200).weights) {
    CHECK(w.approx() > 0.0);
    CHECK(w.approx() < 4.0);
  }
}

TEST_CASE("parameters are unit frame exponents") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 30; ++n) {
    Tower t(3, oracle::random_lex_weights(rng, 3, 2));
    for (std::size_t i = 0; i < 8 && t.extend_to(i); ++i) {
      for (std::size_t s = 0; s < 3; ++s) {
        CHECK(t.frame_exponent(i, t.parameter(i, s)) == unit_vector(3, s));
        CHECK(t.ord(i, t.parameter(i, s)) == 1);
      }
    }
  }
}

TEST_CASE("Euclidean tie terminates") {
  Tower t(2, {lex({2}), lex({3})});
  CHECK(t.step());
  CHECK(t.step());
  CHECK(t.status() == TowerStatus::active);
  CHECK_FALSE(t.step());
  CHECK(t.status() == TowerStatus::terminated_tie);
  REQUIRE(t.tie());
  CHECK(t.tie()->frame == 2);
  CHECK(t.tie()->slots == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(t.step(), TowerError);
  CHECK_FALSE(t.extend_to(3));
  CHECK_THROWS_AS(t.frame(3), TowerError);
  CHECK(t.center_history(10).size() == 2);
}

TEST_CASE("transform_step examples") {
  Tower t = nonarchimedean_tower();
  auto m1 = t.transform_step(MonomialIdeal::maximal(0, 3));
  CHECK(m1.is_unit());
  CHECK(m1.frame() == 1);
  MonomialIdeal i(0, {make_exponents({2, 0, 0}), make_exponents({0, 1, 0})});
  CHECK(t.transform_step(i) ==
        MonomialIdeal(1, {make_exponents({1, 0, 0}), make_exponents({0, 1, 0})}));
  CHECK(t.transform_step(MonomialIdeal(0, {make_exponents({0, 1, 0})})) ==
        MonomialIdeal(1, {make_exponents({0, 1, 0})}));
  CHECK(t.transform_step(MonomialIdeal(0, {make_exponents({1, 0, 0})})).is_unit());
  auto trail = t.transform_trail(i, 3);
  CHECK(trail.ideals.size() == 3);
  CHECK(trail.orders.front() == 1);
}

TEST_CASE("frak membership") {
  Tower t = nonarchimedean_tower();
  CHECK(t.frak_member(1, mono({0, 1, 0})));
  CHECK_FALSE(t.frak_member(1, mono({1, 0, 0})));
  CHECK_FALSE(t.frak_member(0, mono({0, 0, 0})));
  Tower a = archimedean_tower();
  for (std::size_t k = 0; k < 6; ++k) CHECK_FALSE(a.frak_member(k, mono({0, 0, 0})));
}

TEST_CASE("frame integrity and step identity on random towers") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 40; ++n) {
    std::size_t d = 2 + n % 3;
    Tower t(d, n % 2 ? oracle::random_lex_weights(rng, d, 2)
                     : oracle::random_algebraic_weights(rng, d, {1, 2, 3}));
    for (std::size_t i = 0; i < 15 && t.extend_to(i + 1); ++i) {
      CHECK(t.integrity_error(i).empty());
      auto q = LaurentMonomial{oracle::random_exponents(rng, d, -4, 4)};
      auto u = t.frame_exponent(i, q);
      std::size_t j = *t.center(i);
      CHECK(t.ord(i + 1, q) == 2 * t.ord(i, q) - u[j]);
    }
  }
}

TEST_CASE("argmin_slots") {
  CHECK(argmin_slots({lex({2}), lex({1}), lex({3})}) == std::vector<std::size_t>{1});
  CHECK(argmin_slots({lex({2}), lex({2}), lex({3})}) == std::vector<std::size_t>{0, 1});
}
