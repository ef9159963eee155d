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

#include "frobkit/cartier.hpp"
#include "frobkit/purity.hpp"
#include "test_support.hpp"

namespace frobkit {
namespace {

using testing::I;
using testing::P;

Ring line(std::uint64_t p) { return make_ring({"x"}, p); }

// max gauge of phi_eval(op, x^i) over every basis index, times q.
std::uint64_t brute_gauge_bound(const CartierOp& op) {
  const auto& r = op.ring();
  const std::size_t n = r->num_vars();
  const std::uint64_t q = op.q();
  std::vector<Exponent> idx(n, 0);
  std::uint64_t best = 0;
  for (;;) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = idx[i];
    best = std::max(best, gauge_of(phi_eval(op, Polynomial::monomial(r, m))).clamped());
    std::size_t i = 0;
    while (i < n && ++idx[i] == q) idx[i++] = 0;
    if (i == n) break;
  }
  return q * best;
}

TEST(Sigma, Examples) {
  auto r2 = line(2);
  auto trivial = sigma(CartierOp(P(r2, "1"), 1));
  EXPECT_TRUE(trivial.certified);
  EXPECT_EQ(trivial.steps, 0u);
  EXPECT_TRUE(trivial.stable.is_unit());

  auto r3 = line(3);
  auto a = sigma(CartierOp(P(r3, "x^3"), 1));
  EXPECT_TRUE(a.certified);
  EXPECT_EQ(a.steps, 1u);
  EXPECT_TRUE(ideal_equals(a.stable, I(r3, "x")));

  auto b = sigma(CartierOp(P(r3, "x^6"), 1));
  EXPECT_TRUE(b.certified);
  EXPECT_EQ(b.steps, 1u);
  EXPECT_TRUE(ideal_equals(b.stable, I(r3, "x^2")));
  EXPECT_EQ(b.gauge_bound, 6u);
}

TEST(Sigma, StartAndBudget) {
  auto r3 = line(3);
  CartierOp op(P(r3, "x^3"), 1);
  auto from_x = sigma(op, I(r3, "x"));
  EXPECT_TRUE(from_x.certified);
  EXPECT_EQ(from_x.steps, 0u);
  EXPECT_THROW(sigma(CartierOp(P(r3, "1"), 1), I(r3, "x")), DomainError);

  auto cut = sigma(op, std::nullopt, 1);
  EXPECT_FALSE(cut.certified);
  EXPECT_EQ(cut.steps, 1u);
  EXPECT_TRUE(ideal_equals(cut.stable, I(r3, "x")));
}

TEST(Sigma, ZeroOperatorReachesZeroIdeal) {
  auto r = make_ring({"x", "y"}, 5);
  auto rep = sigma(CartierOp(P(r, "0"), 1));
  EXPECT_TRUE(rep.certified);
  EXPECT_TRUE(rep.stable.is_zero());
  EXPECT_EQ(rep.steps, 1u);
}

TEST(Nilpotent, Examples) {
  auto r3 = line(3);
  EXPECT_TRUE(is_nilpotent_mod(CartierOp(P(r3, "0"), 1), Ideal::unit(r3), I(r3, "x")));
  EXPECT_TRUE(is_nilpotent_mod(CartierOp(P(r3, "x^3"), 1), Ideal::unit(r3), I(r3, "x")));
  EXPECT_FALSE(is_nilpotent_mod(CartierOp(P(r3, "x^2"), 1), Ideal::unit(r3), I(r3, "x")));
}

TEST(Nilpotent, Preconditions) {
  auto r3 = line(3);
  EXPECT_THROW(is_nilpotent_mod(CartierOp(P(r3, "1"), 1), Ideal::unit(r3), I(r3, "x - 1")),
               DomainError);
  EXPECT_THROW(is_nilpotent_mod(CartierOp(P(r3, "1"), 1), I(r3, "x"), Ideal(r3)), DomainError);
}

TEST(Nilpotent, ProperStart) {
  // op(<x, y>) = <x, xy>, already inside <x>.
  auto r = make_ring({"x", "y"}, 2);
  CartierOp op(P(r, "x^2 y"), 1);
  ASSERT_TRUE(is_compatible(op, I(r, "x")));
  EXPECT_TRUE(is_nilpotent_mod(op, I(r, "y"), I(r, "x")));
}

TEST(GaugeOf, Examples) {
  auto r = make_ring({"x", "y"}, 7);
  EXPECT_EQ(gauge_of(P(r, "x^3 y^2 + x")), GaugeValue::of(3));
  EXPECT_TRUE(gauge_of(P(r, "0")).is_minus_infinity());
  EXPECT_EQ(gauge_of(P(r, "1")), GaugeValue::of(0));
  EXPECT_LT(GaugeValue::minus_infinity(), GaugeValue::of(0));
  EXPECT_EQ(GaugeValue::minus_infinity().to_string(), "-inf");
  EXPECT_EQ(GaugeValue::minus_infinity().clamped(), 0u);
}

TEST(GaugeOf, Invariants) {
  std::mt19937_64 rng(8);
  auto r = make_ring({"x", "y", "z"}, 5);
  for (int k = 0; k < 100; ++k) {
    Polynomial f = testing::random_poly(r, rng, 4, 6);
    Polynomial g = testing::random_poly(r, rng, 4, 6);
    EXPECT_LE(gauge_of(f + g), std::max(gauge_of(f), gauge_of(g)));
    EXPECT_LE(gauge_of(f * g).clamped(), gauge_of(f).clamped() + gauge_of(g).clamped());
    EXPECT_EQ(gauge_of(f).is_minus_infinity(), f.is_zero());
  }
}

TEST(GaugeBound, Examples) {
  auto r3 = line(3);
  EXPECT_EQ(gauge_bound(CartierOp(P(r3, "1"), 1)), 0u);
  EXPECT_EQ(gauge_bound(CartierOp(P(r3, "x^6"), 1)), 6u);
  EXPECT_EQ(gauge_bound(CartierOp(P(r3, "0"), 1)), 0u);
}

TEST(GaugeBound, MatchesEnumerationOverBasisIndices) {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x", "y"}, p);
    for (std::uint64_t e : {1, 2}) {
      for (int k = 0; k < 10; ++k) {
        CartierOp op(testing::random_poly(r, rng, 4, 12), e);
        EXPECT_EQ(gauge_bound(op), brute_gauge_bound(op)) << op.premultiplier().to_string();
      }
    }
  }
}

TEST(GaugeProperties, Contraction) {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x", "y"}, p);
    for (int k = 0; k < 20; ++k) {
      std::uint64_t e = 1 + k % 2;
      CartierOp op(testing::random_poly(r, rng, 4, 10), e);
      const std::uint64_t q = op.q();
      const std::uint64_t big_k = gauge_bound(op);
      Polynomial f = testing::random_poly(r, rng, 5, 40);
      const double d = static_cast<double>(gauge_of(f).clamped());
      Polynomial g = f;
      double qn = 1;
      for (int n = 1; n <= 3; ++n) {
        g = phi_eval(op, g);
        qn *= static_cast<double>(q);
        GaugeValue got = gauge_of(g);
        if (got.is_minus_infinity()) break;
        double bound = d / qn + static_cast<double>(big_k) / static_cast<double>(q - 1);
        EXPECT_LE(static_cast<double>(got.value()), bound + 1e-9);
      }
    }
  }
}

TEST(GaugeProperties, CoefficientBound) {
  std::mt19937_64 rng(29);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x", "y", "z"}, p);
    for (std::uint64_t e : {1, 2}) {
      const std::uint64_t q = frobenius_q(static_cast<std::uint32_t>(p), e);
      for (int k = 0; k < 10; ++k) {
        Polynomial f = testing::random_poly(r, rng, 6, 30);
        const std::uint64_t d = gauge_of(f).value();
        for (const auto& [residue, coeff] : basis_expansion(f, e))
          EXPECT_LE(gauge_of(coeff).value(), d / q);
      }
    }
  }
}

TEST(GaugeProperties, GenerationBound) {
  std::mt19937_64 rng(31);
  for (std::uint64_t p : {2, 3}) {
    auto r = make_ring({"x", "y"}, p);
    for (int k = 0; k < 10; ++k) {
      CartierOp op(testing::random_poly(r, rng, 3, 8), 1);
      const double q = static_cast<double>(op.q());
      const double big_k = static_cast<double>(gauge_bound(op));
      Ideal j(r, {testing::random_poly(r, rng, 3, 20), testing::random_poly(r, rng, 3, 20)});
      double big_d = 0;
      for (const auto& g : j.generators())
        big_d = std::max(big_d, static_cast<double>(gauge_of(g).value()));
      double qn = 1;
      for (int n = 1; n <= 3; ++n) {
        j = cartier_apply(op, j);
        qn *= q;
        for (const auto& g : j.generators()) {
          EXPECT_LE(static_cast<double>(gauge_of(g).value()),
                    big_d / qn + big_k / (q - 1) + 1 + 1e-9);
        }
      }
    }
  }
}

TEST(SigmaProperties, FixedPointAndDescent) {
  std::mt19937_64 rng(37);
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x", "y"}, p);
    for (int k = 0; k < 10; ++k) {
      CartierOp op(testing::random_poly(r, rng, 3, 2 * static_cast<Exponent>(p) + 2), 1);
      auto rep = sigma(op);
      ASSERT_TRUE(rep.certified);
      EXPECT_LE(rep.steps, kDefaultIterationBudget);
      EXPECT_TRUE(ideal_equals(cartier_apply(op, rep.stable), rep.stable));

      Ideal cur = Ideal::unit(r);
      for (std::size_t s = 0; s <= rep.steps; ++s) {
        Ideal next = cartier_apply(op, cur);
        EXPECT_TRUE(cur.contains(next));
        cur = next;
      }
      EXPECT_TRUE(ideal_equals(cur, rep.stable));
    }
  }
}

TEST(SigmaProperties, StableImageIsLargestSurjectiveSubideal) {
  // Any compatible J inside <1> with op(J) = J lies inside sigma.
  auto r = make_ring({"x", "y"}, 3);
  CartierOp op(P(r, "x^5 y^2"), 1);
  auto rep = sigma(op);
  ASSERT_TRUE(rep.certified);
  for (const char* src : {"x^2", "x^2 y", "x y", "x^2; y"}) {
    Ideal j = I(r, src);
    auto inner = sigma(op, j);
    ASSERT_TRUE(inner.certified) << src;
    EXPECT_TRUE(rep.stable.contains(inner.stable)) << src;
  }
}

}  // namespace
}  // namespace frobkit
