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

// F-purity via Fedder's criterion, Frobenius splittings and compatible ideals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobkit/frobenius.hpp"
#include "frobkit/groebner.hpp"

namespace frobkit {

// Membership of f in at^{[p^e]}. Term-wise when `at` is generated by
// variables, Groebner-backed otherwise.
bool in_bracket_power(const Polynomial& f, const Ideal& at, std::uint64_t e,
                      const GbOptions& options = {});

// Per-variable exponent caps describing at^{[q]} for a variable-generated
// `at`; variables outside `at` get no cap.
std::vector<std::uint64_t> bracket_caps(const Ideal& at, std::uint64_t q);

// Membership of prod_i factors[i]^k in at^{[p^e]}, computed in the quotient
// so the full power is never expanded.
bool power_product_in_bracket(std::span<const Polynomial> factors, std::uint64_t k,
                              const Ideal& at, std::uint64_t e, const GbOptions& options = {});

// S/<f> is F-pure near V(at) iff f^{p^e-1} is not in at^{[p^e]}.
// `at` defaults to the homogeneous maximal ideal.
bool fedder_hypersurface(const Polynomial& f, std::uint64_t e = 1,
                         const std::optional<Ideal>& at = std::nullopt,
                         const GbOptions& options = {});

// Complete-intersection form: prod f_i^{p^e-1} not in at^{[p^e]}. The caller
// guarantees that `fs` is a regular sequence; this is not checked.
bool fedder_ci(std::span<const Polynomial> fs, std::uint64_t e = 1,
               const std::optional<Ideal>& at = std::nullopt, const GbOptions& options = {});

// General form: (I^{[p^e]} : I) not contained in at^{[p^e]}.
bool fedder_ideal(const Ideal& ideal, std::uint64_t e = 1,
                  const std::optional<Ideal>& at = std::nullopt, const GbOptions& options = {});

// op(1) is a nonzero constant, so a rescaling of op sends 1 to 1.
bool is_splitting(const CartierOp& op);

// u*I subset I^{[p^e]}, i.e. op(I) subset I.
bool is_compatible(const CartierOp& op, const Ideal& ideal, const GbOptions& options = {});

struct LatticeResult {
  std::vector<Ideal> ideals;
  // True when the cap stopped the closure before it was complete.
  bool truncated = false;
};

// Closure of `seeds` under pairwise sums, intersections and colons, keeping
// proper ideals only. Discovery order is breadth-first from the seeds sorted
// canonically, so output order is reproducible.
LatticeResult lattice_closure(const CartierOp& op, std::span<const Ideal> seeds, std::size_t cap,
                              const GbOptions& options = {});

// Deterministic total order on ideals of one ring via their reduced bases.
bool canonical_less(const Ideal& a, const Ideal& b);

}  // namespace frobkit
