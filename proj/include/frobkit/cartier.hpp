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

#pragma once

// Cartier-module dynamics on ideals: stable images, nilpotence and gauges.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "frobkit/frobenius.hpp"
#include "frobkit/groebner.hpp"

namespace frobkit {

inline constexpr std::size_t kDefaultIterationBudget = 64;

// The box-degree gauge of a polynomial: the largest single-variable exponent
// over all terms. The zero polynomial has gauge minus infinity, ordered below
// every integer.
class GaugeValue {
 public:
  static GaugeValue minus_infinity() noexcept { return GaugeValue(); }
  static GaugeValue of(std::uint64_t d) noexcept { return GaugeValue(d); }

  bool is_minus_infinity() const noexcept { return !value_; }
  // Undefined for minus infinity.
  std::uint64_t value() const { return *value_; }
  // max(value, 0), i.e. minus infinity treated as 0.
  std::uint64_t clamped() const noexcept { return value_.value_or(0); }

  friend bool operator==(const GaugeValue&, const GaugeValue&) = default;
  friend std::strong_ordering operator<=>(const GaugeValue& a, const GaugeValue& b) noexcept {
    if (!a.value_ || !b.value_) return bool(a.value_) <=> bool(b.value_);
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  GaugeValue() = default;
  explicit GaugeValue(std::uint64_t d) : value_(d) {}
  std::optional<std::uint64_t> value_;
};

GaugeValue gauge_of(const Polynomial& f);

// K = p^e * max_i gauge(op(x^i)) over basis monomials 0 <= i_j < p^e, with
// minus infinity counted as 0. Then gauge(op(f)) <= gauge(f)/p^e + K/p^e.
std::uint64_t gauge_bound(const CartierOp& op);

struct StabilizationReport {
  Ideal stable;
  // Index k of the first chain member with op(J_k) = J_k, or the number of
  // applications performed when uncertified.
  std::size_t steps = 0;
  bool certified = false;
  std::uint64_t gauge_bound = 0;
};

// Iterates J_{k+1} = op(J_k) from `start` (default <1>) until it repeats or
// the budget runs out. Requires op(start) subset start.
StabilizationReport sigma(const CartierOp& op, const std::optional<Ideal>& start = std::nullopt,
                          std::size_t budget = kDefaultIterationBudget,
                          const GbOptions& options = {});

// Whether op^n(J) subset I for some n <= budget, where I is op-compatible and
// op(J) subset J + I.
bool is_nilpotent_mod(const CartierOp& op, const Ideal& j, const Ideal& i,
                      std::size_t budget = kDefaultIterationBudget, const GbOptions& options = {});

}  // namespace frobkit
