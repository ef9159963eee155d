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

#include "frobkit/purity.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "frobkit/kernels.hpp"

namespace frobkit {

namespace {

Ideal locality_point(const Ring& ring, const std::optional<Ideal>& at) {
  if (!at) return Ideal::maximal(ring);
  require_same_ring(ring, at->ring());
  return *at;
}

void require_proper(const Ideal& at, const GbOptions& options) {
  if (at.is_unit(options)) throw DomainError("locality ideal must be proper");
}

}  // namespace

std::vector<std::uint64_t> bracket_caps(const Ideal& at, std::uint64_t q) {
  std::vector<std::uint64_t> caps(at.ring()->num_vars(), UINT64_MAX);
  for (const auto& g : at.generators()) {
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 1) caps[i] = q;
    }
  }
  return caps;
}


bool power_product_in_bracket(std::span<const Polynomial> factors, std::uint64_t k,
                              const Ideal& at, std::uint64_t e, const GbOptions& options) {
  for (const auto& f : factors) require_same_ring(f.ring(), at.ring());
  const Ring& ring = at.ring();
  const std::uint64_t q = frobenius_q(ring->characteristic(), e);
  if (at.is_variable_generated()) {
    auto caps = bracket_caps(at, q);
    Polynomial acc = kernels::truncate(Polynomial::constant(ring, 1), caps);
    for (const auto& f : factors) {
      acc = kernels::truncated_multiply(acc, kernels::truncated_power(f, k, caps), caps);
      if (acc.is_zero()) return true;
    }
    return acc.is_zero();
  }
  Ideal bracket = bracket_power(at, e);
  const auto& gb = bracket.basis(options);
  Polynomial acc = Polynomial::constant(ring, 1);
  for (const auto& f : factors) {
    Polynomial fr = reduce(f, gb);
    Polynomial power = Polynomial::constant(ring, 1);
    for (std::uint64_t b = k; b > 0; b >>= 1) {
      if (b & 1) power = reduce(power * fr, gb);
      if (b > 1) fr = reduce(fr * fr, gb);
    }
    acc = reduce(acc * power, gb);
  }
  return acc.is_zero();
}

bool in_bracket_power(const Polynomial& f, const Ideal& at, std::uint64_t e,
                      const GbOptions& options) {
  require_same_ring(f.ring(), at.ring());
  Polynomial one[] = {f};
  return power_product_in_bracket(one, 1, at, e, options);
}

bool fedder_hypersurface(const Polynomial& f, std::uint64_t e, const std::optional<Ideal>& at,
                         const GbOptions& options) {
  if (f.is_zero()) throw DomainError("fedder: f is zero");
  Ideal point = locality_point(f.ring(), at);
  require_proper(point, options);
  const std::uint64_t q = frobenius_q(f.decl().characteristic(), e);
  Polynomial one[] = {f};
  return !power_product_in_bracket(one, q - 1, point, e, options);
}

bool fedder_ci(std::span<const Polynomial> fs, std::uint64_t e, const std::optional<Ideal>& at,
               const GbOptions& options) {
  if (fs.empty()) throw DomainError("fedder-ci: empty sequence");
  for (const auto& f : fs) {
    require_same_ring(fs.front().ring(), f.ring());
    if (f.is_zero()) throw DomainError("fedder-ci: zero element in sequence");
  }
  Ideal point = locality_point(fs.front().ring(), at);
  require_proper(point, options);
  const std::uint64_t q = frobenius_q(point.ring()->characteristic(), e);
  return !power_product_in_bracket(fs, q - 1, point, e, options);
}

bool fedder_ideal(const Ideal& ideal, std::uint64_t e, const std::optional<Ideal>& at,
                  const GbOptions& options) {
  Ideal point = locality_point(ideal.ring(), at);
  require_proper(point, options);
  if (ideal.is_unit(options)) throw DomainError("fedder-ideal: ideal must be proper");
  if (!point.contains(ideal, options)) throw DomainError("fedder-ideal: locality ideal must contain I");
  if (ideal.is_zero()) return true;
  Ideal colon = ideal_colon(bracket_power(ideal, e), ideal, options);
  for (const auto& g : colon.basis(options)) {
    if (!in_bracket_power(g, point, e, options)) return true;
  }
  return false;
}

bool is_splitting(const CartierOp& op) {
  Polynomial v = phi_eval(op, Polynomial::constant(op.ring(), 1));
  return !v.is_zero() && v.is_constant();
}

bool is_compatible(const CartierOp& op, const Ideal& ideal, const GbOptions& options) {
  require_same_ring(op.ring(), ideal.ring());
  if (ideal.is_zero()) return true;
  Ideal bracket = bracket_power(ideal, op.level());
  for (const auto& g : ideal.generators()) {
    if (!bracket.contains(op.premultiplier() * g, options)) return false;
  }
  return true;
}

bool canonical_less(const Ideal& a, const Ideal& b) {
  const auto& ba = a.basis();
  const auto& bb = b.basis();
  if (ba.size() != bb.size()) return ba.size() < bb.size();
  const auto& order = a.ring()->order();
  for (std::size_t k = 0; k < ba.size(); ++k) {
    auto ta = ba[k].terms();
    auto tb = bb[k].terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (int c = compare(ta[i].mono, tb[i].mono, order); c != 0) return c > 0;
      if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size();
  }
  return false;
}

LatticeResult lattice_closure(const CartierOp& op, std::span<const Ideal> seeds, std::size_t cap,
                              const GbOptions& options) {
  LatticeResult result;
  std::vector<Ideal> ordered(seeds.begin(), seeds.end());
  for (const auto& s : ordered) {
    require_same_ring(op.ring(), s.ring());
    if (!is_compatible(op, s, options)) throw DomainError("lattice: seed " + s.to_string() + " is not compatible");
  }
  std::stable_sort(ordered.begin(), ordered.end(), canonical_less);

  auto& members = result.ideals;
  // Adds a new proper ideal; false once the cap is hit.
  auto admit = [&](Ideal candidate) {
    if (candidate.is_unit(options)) return true;
    for (const auto& m : members) {
      if (ideal_equals(m, candidate, options)) return true;
    }
    if (members.size() >= cap) {
      result.truncated = true;
      return false;
    }
    members.push_back(std::move(candidate));
    return true;
  };

  for (auto& s : ordered) {
    if (!admit(std::move(s))) return result;
  }
  // Breadth-first: each new member is combined with every earlier member.
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (std::size_t k = 0; k < next; ++k) {
      Ideal a = members[k];
      Ideal b = members[next];
      if (!admit(ideal_sum(a, b))) return result;
      if (!admit(ideal_intersect(a, b, options))) return result;
      if (!b.is_zero() && !admit(ideal_colon(a, b, options))) return result;
      if (!a.is_zero() && !admit(ideal_colon(b, a, options))) return result;
    }
  }
  return result;
}

}  // namespace frobkit
