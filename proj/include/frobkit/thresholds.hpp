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

// nu-invariants, F-pure thresholds and test ideals of principal pairs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frobkit/cartier.hpp"
#include "frobkit/groebner.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

// nu(p^e) = max{ l : f^l not in at^{[p^e]} }. Requires f != 0 and f in at.
std::uint64_t nu(const Polynomial& f, std::uint64_t e, const std::optional<Ideal>& at = std::nullopt,
                 const GbOptions& options = {});

// nu(p^e) for e = 1..e_max, each level seeded from p*nu(p^{e-1}).
std::vector<std::uint64_t> nu_sequence(const Polynomial& f, std::uint64_t e_max,
                                       const std::optional<Ideal>& at = std::nullopt,
                                       const GbOptions& options = {});

struct FptResult {
  std::uint32_t prime = 0;
  // (e, nu(p^e)) for e = 1..e_max.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nus;
  // The threshold lies in (lower, upper].
  Rational lower;
  Rational upper;
};

FptResult fpt_bounds(const Polynomial& f, std::uint64_t e_max,
                     const std::optional<Ideal>& at = std::nullopt, const GbOptions& options = {});

// Sharp F-purity of (S, t*div f) at level e: f^{ceil(t(p^e-1))} not in at^{[p^e]}.
bool fpure_pair(const Polynomial& f, const Rational& t, std::uint64_t e = 1,
                const std::optional<Ideal>& at = std::nullopt, const GbOptions& options = {});

// The root-chain member pe_root(<f^{ceil(t p^e)}>, e). These ascend in e and
// equal tau(f^t) for all large e.
Ideal tau_chain_member(const Polynomial& f, const Rational& t, std::uint64_t e);

// Thrown when the tau chain has not repeated within the budget.
class TauBudgetExhausted : public CapExceeded {
 public:
  TauBudgetExhausted(Ideal previous, Ideal last);
  const Ideal& previous() const noexcept { return previous_; }
  const Ideal& last() const noexcept { return last_; }

 private:
  Ideal previous_;
  Ideal last_;
};

// Test ideal tau(f^t) of the principal pair on the polynomial ring.
//
// With t = A / (p^b (p^c - 1)), A = k(p^c - 1) + a and 0 <= a < p^c - 1, the
// chain members at levels e = b + n*c are
//     pe_root(f^k * phi^n(<f>), b),   phi(J) = pe_root(f^a * J, c),
// and phi^{n+1}(<f>) = phi^n(<f>) forces every later member to agree, so the
// first repeat of phi^n(<f>) is the stable value. Members at other levels can
// repeat before the chain stabilizes, which is why only these are compared.
// Comparison starts at the first such level >= e_start.
Ideal tau_principal(const Polynomial& f, const Rational& t, std::uint64_t e_start = 1,
                    std::size_t budget = kDefaultIterationBudget, const GbOptions& options = {});

// Grid points k/denom_cap in (0, t_max] where tau(f^t) drops relative to the
// previous grid point. Grid evaluations run in parallel.
std::vector<Rational> jumping_numbers(const Polynomial& f, const Rational& t_max,
                                      std::uint64_t denom_cap, std::uint64_t e_level = 1,
                                      std::size_t budget = kDefaultIterationBudget,
                                      const GbOptions& options = {});

// Serial reference for jumping_numbers.
std::vector<Rational> jumping_numbers_serial(const Polynomial& f, const Rational& t_max,
                                             std::uint64_t denom_cap, std::uint64_t e_level = 1,
                                             std::size_t budget = kDefaultIterationBudget,
                                             const GbOptions& options = {});

}  // namespace frobkit
