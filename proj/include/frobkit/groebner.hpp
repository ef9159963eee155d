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

// Ideals of F_p[x_1..x_n] and the Buchberger engine behind them.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/polyring.hpp"

namespace frobkit {

inline constexpr std::size_t kDefaultPairCap = 200'000;

// Process-wide default for GbOptions::pair_cap.
std::size_t default_pair_cap() noexcept;
void set_default_pair_cap(std::size_t cap) noexcept;

struct GbOptions {
  // Maximum number of S-pair reductions before CapExceeded is thrown.
  std::size_t pair_cap = default_pair_cap();
};

namespace detail {
struct GbCache;
}

// An ideal given by generators. The reduced Groebner basis is computed on
// first use and shared between copies.
class Ideal {
 public:
  explicit Ideal(Ring ring);
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal unit(Ring ring);
  // <x_1, ..., x_n>
  static Ideal maximal(Ring ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  // The reduced Groebner basis: monic, inter-reduced, sorted descending by
  // leading monomial.
  const std::vector<Polynomial>& basis(const GbOptions& options = {}) const;

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit(const GbOptions& options = {}) const;
  bool contains(const Polynomial& f, const GbOptions& options = {}) const;
  bool contains(const Ideal& other, const GbOptions& options = {}) const;

  // True when every generator is a single variable x_i.
  bool is_variable_generated() const noexcept;

  // "<g1, g2, ...>" over the reduced basis.
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

// Parses "g1; g2; ..." (commas are accepted as separators too).
Ideal parse_ideal(std::string_view src, const Ring& ring);

// Reduced Groebner basis of an arbitrary generator list.
std::vector<Polynomial> compute_groebner_basis(std::span<const Polynomial> gens,
                                               const GbOptions& options = {});

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const GbOptions& options = {});

// Full reduction of f by `divisors`; the unique remainder when they form a
// Groebner basis.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const GbOptions& options = {});

// Exact quotient h / g; throws DomainError if g does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& g);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GbOptions& options = {});
// {g : g*J subset I}. J must be nonzero.
Ideal ideal_colon(const Ideal& i, const Ideal& j, const GbOptions& options = {});
bool ideal_equals(const Ideal& a, const Ideal& b, const GbOptions& options = {});

}  // namespace frobkit
