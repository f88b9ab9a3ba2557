#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace testing;

TEST_CASE("compare") {
  CHECK(compare(lex({0, 1}), lex({1, 0})) == Ordering::less);
  CHECK(compare(alg({1, 2, 3}, {1, 1, 0}), alg({1, 2, 3}, {2, 0, 1})) == Ordering::less);
  CHECK(compare(lex({3, -2}), lex({3, -2})) == Ordering::equal);
  CHECK_THROWS_AS(compare(lex({1}), lex({1, 0})), ValueError);
  CHECK_THROWS_AS(compare(lex({1}), alg({1}, {1})), ValueError);
}

TEST_CASE("linear_combine") {
  using V = std::vector<Integer>;
  CHECK(linear_combine(V{1, -1}, {lex({1, 0}), lex({0, 1})}) == lex({1, -1}));
  auto form = linear_combine(V{1, -1, -1}, {alg({1, 2, 3}, {2, 0, 1}), alg({1, 2, 3}, {1, 0, 0}),
                                            alg({1, 2, 3}, {0, 1, 0})});
  CHECK(form == alg({1, 2, 3}, {1, -1, 1}));
  CHECK(linear_combine(V{0, 0}, {lex({4, 1}), lex({2, 2})}).sign() == Sign::zero);
  CHECK_THROWS_AS(linear_combine(V{}, {}), ValueError);
}

TEST_CASE("sign") {
  CHECK(alg({1, 2, 3}, {1, -1, 1}).sign() == Sign::positive);
  CHECK(lex({0, -3}).sign() == Sign::negative);
  CHECK(alg({1, 2}, {0, 0}).sign() == Sign::zero);
  CHECK(lex({0, 0}).sign() == Sign::zero);
  // Close cancellation: 99/70 approximates sqrt 2 from above.
  CHECK(alg({1, 2}, {-99, 70}).sign() == Sign::negative);
  CHECK(alg({1, 2}, {-140, 99}).sign() == Sign::positive);
}

TEST_CASE("is_infinitesimal") {
  CHECK(is_infinitesimal(lex({0, 1}), lex({1, 0})));
  CHECK_FALSE(is_infinitesimal(lex({1, 0}), lex({2, 0})));
  CHECK_FALSE(is_infinitesimal(alg({1, 3}, {1, 0}), alg({1, 3}, {2, 1})));
  for (long n : {1L, 10L, 1000000L}) {
    CHECK(compare(lex({0, 1}).scaled(n), lex({1, 0})) == Ordering::less);
  }
}

TEST_CASE("basis validation") {
  CHECK_NOTHROW(validate_basis({1, 2, 3}));
  CHECK_THROWS_AS(validate_basis({1, 4}), ValueError);
  CHECK_THROWS_AS(validate_basis({2, 1}), ValueError);
  CHECK_THROWS_AS(validate_basis({0}), ValueError);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ValueError);
  CHECK_THROWS_AS(parse_rational("abc"), ValueError);
}

TEST_CASE("order compatibility and combine/compare agreement (fuzz)") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 300; ++n) {
    auto lw = oracle::random_lex_weights(rng, 3, 3);
    auto aw = oracle::random_algebraic_weights(rng, 3, {1, 2, 5});
    for (const auto* w : {&lw, &aw}) {
      const auto& a = (*w)[0];
      const auto& b = (*w)[1];
      const auto& c = (*w)[2];
      Ordering ab = compare(a, b);
      CHECK(compare(a + c, b + c) == ab);
      Sign s = linear_combine({1, -1}, {a, b}).sign();
      CHECK(static_cast<int>(s) ==
            (ab == Ordering::less ? -1 : ab == Ordering::equal ? 0 : 1));
    }
  }
}

TEST_CASE("algebraic sign agrees with 50-digit float evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-50, 50);
  const std::vector<std::uint64_t> basis = {1, 2, 3, 5, 7};
  for (int n = 0; n < 1000; ++n) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < basis.size(); ++k) c.emplace_back(coef(rng), 1 + (n % 7));
    AlgebraicReal a(basis, c);
    CHECK(static_cast<int>(a.sign()) == oracle::float50_sign(a));
  }
}
