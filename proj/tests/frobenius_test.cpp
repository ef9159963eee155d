// Copyright 2026 The frobkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "frobkit/frobenius.hpp"
#include "test_support.hpp"

namespace frobkit {
namespace {

using testing::I;
using testing::P;

TEST(BracketPower, Examples) {
  auto r2 = make_ring({"x", "y"}, 2);
  EXPECT_TRUE(ideal_equals(bracket_power(I(r2, "x; y"), 1), I(r2, "x^2; y^2")));
  auto r3 = make_ring({"x", "y"}, 3);
  EXPECT_TRUE(ideal_equals(bracket_power(I(r3, "x + y"), 1), I(r3, "x^3 + y^3")));
  auto r5 = make_ring({"x", "y"}, 5);
  EXPECT_TRUE(ideal_equals(bracket_power(I(r5, "x; x + y"), 1), bracket_power(I(r5, "x; y"), 1)));
  EXPECT_THROW(bracket_power(I(r5, "x"), 14), OverflowError);
}

TEST(BracketPower, FrobeniusPowerMatchesPow) {
  std::mt19937_64 rng(41);
  auto r = make_ring({"x", "y", "z"}, 3);
  for (int k = 0; k < 20; ++k) {
    Polynomial f = testing::random_poly(r, rng, 5, 3);
    EXPECT_EQ(frobenius_power(f, 2), pow(f, 9));
  }
}

TEST(PeRoot, Examples) {
  auto r2 = make_ring({"x", "y"}, 2);
  // Monomial oracle: floor(3/2) = 1, floor(1/2) = 0.
  EXPECT_TRUE(ideal_equals(pe_root(I(r2, "x^3 y"), 1), I(r2, "x")));
  Ideal j = I(r2, "x^2 + y^2");
  Ideal root = pe_root(j, 1);
  EXPECT_TRUE(ideal_equals(root, I(r2, "x + y")));
  // Minimality over every principal candidate of degree <= 1 over F_2.
  for (const char* g : {"1", "x", "y", "x + y", "x + 1", "y + 1", "x + y + 1"}) {
    Ideal k = I(r2, g);
    EXPECT_EQ(bracket_power(k, 1).contains(j), k.contains(root)) << g;
  }
  for (std::uint64_t e : {1, 2, 3}) EXPECT_TRUE(pe_root(Ideal::unit(r2), e).is_unit());
  EXPECT_TRUE(pe_root(Ideal(r2), 1).is_zero());
}

TEST(PeRoot, MonomialFloorOracle) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Exponent> ex(0, 30);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x", "y", "z"}, p);
    for (std::uint64_t e : {1, 2}) {
      std::uint64_t q = frobenius_q(static_cast<std::uint32_t>(p), e);
      for (int k = 0; k < 10; ++k) {
        std::vector<Polynomial> gens, roots;
        for (int g = 0; g < 3; ++g) {
          Monomial m{ex(rng), ex(rng), ex(rng)};
          Monomial fl{static_cast<Exponent>(m[0] / q), static_cast<Exponent>(m[1] / q),
                      static_cast<Exponent>(m[2] / q)};
          gens.push_back(Polynomial::monomial(r, m));
          roots.push_back(Polynomial::monomial(r, fl));
        }
        EXPECT_TRUE(ideal_equals(pe_root(Ideal(r, gens), e), Ideal(r, roots)));
      }
    }
  }
}

TEST(PhiEval, Examples) {
  auto r = make_ring({"x"}, 2);
  CartierOp phi(P(r, "1"), 1);
  EXPECT_EQ(phi_eval(phi, P(r, "x")), P(r, "1"));
  EXPECT_TRUE(phi_eval(phi, P(r, "1")).is_zero());
  CartierOp shifted(P(r, "x"), 1);
  EXPECT_EQ(phi_eval(shifted, P(r, "1")), P(r, "1"));
  EXPECT_THROW(CartierOp(P(r, "x"), 0), DomainError);
}

TEST(CartierApply, Examples) {
  auto r2 = make_ring({"x", "y"}, 2);
  EXPECT_TRUE(cartier_apply(CartierOp(P(r2, "x y"), 1), Ideal::unit(r2)).is_unit());
  auto r3 = make_ring({"x", "y"}, 3);
  EXPECT_TRUE(ideal_equals(cartier_apply(CartierOp(P(r3, "x^3"), 1), Ideal::unit(r3)), I(r3, "x")));
  EXPECT_TRUE(cartier_apply(CartierOp(P(r3, "0"), 1), I(r3, "x; y + 1")).is_zero());
}

TEST(CartierCompose, Examples) {
  auto r3 = make_ring({"x"}, 3);
  CartierOp one(P(r3, "1"), 1);
  EXPECT_EQ(cartier_compose(one, one), CartierOp(P(r3, "1"), 2));

  CartierOp psi(P(r3, "x^2"), 1);
  CartierOp a = cartier_compose(one, psi);
  CartierOp b = cartier_compose(psi, one);
  EXPECT_EQ(a, CartierOp(P(r3, "x^2"), 2));
  EXPECT_EQ(b, CartierOp(P(r3, "x^6"), 2));
  EXPECT_TRUE(phi_eval(a, P(r3, "x^2")).is_zero());
  EXPECT_EQ(phi_eval(b, P(r3, "x^2")), P(r3, "1"));

  // n-fold self-composition has premultiplier u^{1 + p^e + ... + p^{(n-1)e}}.
  auto r = make_ring({"x", "y"}, 3);
  CartierOp op(P(r, "x y^2 + x^2"), 1);
  CartierOp acc = op;
  for (std::uint64_t n = 2; n <= 3; ++n) {
    acc = cartier_compose(op, acc);
    std::uint64_t exponent = 0;
    for (std::uint64_t k = 0; k < n; ++k) exponent += frobenius_q(3, k);
    EXPECT_EQ(acc, CartierOp(pow(op.premultiplier(), exponent), n));
  }
}

class FrobeniusProperties : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Ideal random_ideal(const Ring& r, std::mt19937_64& rng, Exponent deg) {
    std::uniform_int_distribution<int> ngens(1, 2);
    std::vector<Polynomial> gens;
    for (int k = ngens(rng); k > 0; --k) gens.push_back(testing::random_poly(r, rng, 3, deg));
    return Ideal(r, gens);
  }
};

TEST_P(FrobeniusProperties, RootBracketAdjunction) {
  std::mt19937_64 rng(43 + GetParam());
  auto r = make_ring({"x", "y"}, GetParam());
  for (int k = 0; k < 15; ++k) {
    for (std::uint64_t e : {1, 2}) {
      Ideal j = random_ideal(r, rng, 8);
      Ideal root = pe_root(j, e);
      std::vector<Ideal> candidates{root, random_ideal(r, rng, 2),
                                    ideal_sum(root, random_ideal(r, rng, 2)),
                                    ideal_product(root, random_ideal(r, rng, 1))};
      for (const auto& cand : candidates) {
        EXPECT_EQ(bracket_power(cand, e).contains(j), cand.contains(root));
      }
    }
  }
}

TEST_P(FrobeniusProperties, ExactnessAndTowerLaw) {
  std::mt19937_64 rng(44 + GetParam());
  auto r = make_ring({"x", "y"}, GetParam());
  for (int k = 0; k < 10; ++k) {
    Ideal i = random_ideal(r, rng, 3);
    EXPECT_TRUE(ideal_equals(pe_root(bracket_power(i, 1), 1), i));
    Ideal j = random_ideal(r, rng, 12);
    EXPECT_TRUE(ideal_equals(pe_root(j, 2), pe_root(pe_root(j, 1), 1)));
  }
}

TEST_P(FrobeniusProperties, LinearityApplyAndComposition) {
  std::mt19937_64 rng(45 + GetParam());
  auto r = make_ring({"x", "y"}, GetParam());
  for (int k = 0; k < 10; ++k) {
    CartierOp op(testing::random_poly(r, rng, 4, 5), 1 + k % 2);
    Polynomial f = testing::random_poly(r, rng, 5, 6);
    Polynomial s = testing::random_poly(r, rng, 3, 2);
    EXPECT_EQ(phi_eval(op, frobenius_power(s, op.level()) * f), s * phi_eval(op, f));

    Ideal j = random_ideal(r, rng, 4);
    std::vector<Polynomial> uj;
    for (const auto& g : j.generators()) uj.push_back(op.premultiplier() * g);
    EXPECT_TRUE(ideal_equals(cartier_apply(op, j), pe_root(Ideal(r, uj), op.level())));

    CartierOp inner(testing::random_poly(r, rng, 3, 4), 1);
    EXPECT_EQ(phi_eval(cartier_compose(op, inner), f), phi_eval(op, phi_eval(inner, f)));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, FrobeniusProperties, ::testing::Values(2, 3, 5));

}  // namespace
}  // namespace frobkit
