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

#include "frobkit/cartier.hpp"

#include <algorithm>

#include "frobkit/purity.hpp"

namespace frobkit {

GaugeValue gauge_of(const Polynomial& f) {
  if (f.is_zero()) return GaugeValue::minus_infinity();
  std::uint64_t d = 0;
  for (const auto& t : f.terms()) {
    for (Exponent x : t.mono) d = std::max<std::uint64_t>(d, x);
  }
  return GaugeValue::of(d);
}

std::uint64_t gauge_bound(const CartierOp& op) {
  const std::uint64_t q = op.q();
  std::uint64_t best = 0;
  // For a term with exponent a the selecting index is i = q-1 - (a mod q), and
  // a + i = q*floor(a/q) + q-1, so op(x^i) is the expansion coefficient of
  // that residue class.
  for (const auto& [residue, coeff] : basis_expansion(op.premultiplier(), op.level())) {
    best = std::max(best, gauge_of(coeff).clamped());
  }
  return q * best;
}

StabilizationReport sigma(const CartierOp& op, const std::optional<Ideal>& start,
                          std::size_t budget, const GbOptions& options) {
  Ideal current = start ? *start : Ideal::unit(op.ring());
  require_same_ring(op.ring(), current.ring());
  Ideal next = cartier_apply(op, current);
  if (!current.contains(next, options)) throw DomainError("sigma: op(start) is not contained in start");
  StabilizationReport report{current, 0, false, gauge_bound(op)};
  for (std::size_t k = 0;; ++k) {
    if (ideal_equals(next, current, options)) {
      report.stable = current;
      report.steps = k;
      report.certified = true;
      return report;
    }
    if (k + 1 >= budget) {
      report.stable = next;
      report.steps = k + 1;
      return report;
    }
    current = std::move(next);
    next = cartier_apply(op, current);
  }
}

bool is_nilpotent_mod(const CartierOp& op, const Ideal& j, const Ideal& i, std::size_t budget,
                      const GbOptions& options) {
  require_same_ring(op.ring(), j.ring());
  require_same_ring(op.ring(), i.ring());
  if (!is_compatible(op, i, options)) throw DomainError("nilpotent: I is not compatible with op");
  Ideal current = ideal_sum(j, i);
  if (!current.contains(cartier_apply(op, j), options))
    throw DomainError("nilpotent: op(J) is not contained in J + I");
  // op^n(J) + I is descending, so a repeat that is not I decides "no".
  for (std::size_t n = 1; n <= budget; ++n) {
    Ideal next = ideal_sum(cartier_apply(op, current), i);
    if (i.contains(next, options)) return true;
    if (ideal_equals(next, current, options)) return false;
    current = std::move(next);
  }
  return false;
}

}  // namespace frobkit
