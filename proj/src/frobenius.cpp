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

#include "frobkit/frobenius.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace frobkit {

std::uint64_t frobenius_q(std::uint32_t p, std::uint64_t e) {
  constexpr std::uint64_t kMax = std::numeric_limits<Exponent>::max();
  std::uint64_t q = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (q > kMax / p) throw OverflowError("p^e overflow");
    q *= p;
  }
  return q;
}

Polynomial frobenius_power(const Polynomial& f, std::uint64_t e) {
  const std::uint64_t q = frobenius_q(f.decl().characteristic(), e);
  std::vector<Term> terms;
  terms.reserve(f.num_terms());
  // Scaling all exponents by q preserves every monomial order.
  for (const auto& t : f.terms()) terms.push_back({t.mono.scaled(q), t.coeff});
  return Polynomial::from_sorted_terms(f.ring(), std::move(terms));
}

std::map<Monomial, Polynomial> basis_expansion(const Polynomial& f, std::uint64_t e) {
  const std::uint64_t q = frobenius_q(f.decl().characteristic(), e);
  const std::size_t n = f.decl().num_vars();
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial residue(n), quotient(n);
    for (std::size_t i = 0; i < n; ++i) {
      residue[i] = static_cast<Exponent>(t.mono[i] % q);
      quotient[i] = static_cast<Exponent>(t.mono[i] / q);
    }
    buckets[residue].push_back({std::move(quotient), t.coeff});
  }
  std::map<Monomial, Polynomial> out;
  for (auto& [residue, terms] : buckets) {
    out.emplace(residue, Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return out;
}

Ideal bracket_power(const Ideal& ideal, std::uint64_t e) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(frobenius_power(g, e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal pe_root(const Ideal& j, std::uint64_t e) {
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) {
    for (auto& [residue, coeff] : basis_expansion(g, e)) gens.push_back(std::move(coeff));
  }
  return Ideal(j.ring(), std::move(gens));
}

CartierOp::CartierOp(Polynomial premultiplier, std::uint64_t level)
    : premult_(std::move(premultiplier)), level_(level) {
  if (level_ < 1) throw DomainError("cartier level must be at least 1");
  q_ = frobenius_q(premult_.decl().characteristic(), level_);
}

Polynomial trace_map(const Polynomial& f, std::uint64_t e) {
  const std::uint64_t q = frobenius_q(f.decl().characteristic(), e);
  const std::size_t n = f.decl().num_vars();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial root(n);
    bool hit = true;
    for (std::size_t i = 0; i < n && hit; ++i) {
      hit = t.mono[i] % q == q - 1;
      root[i] = static_cast<Exponent>(t.mono[i] / q);
    }
    if (hit) terms.push_back({std::move(root), t.coeff});
  }
  // Selected terms share one residue class, so the map m -> m / q is strictly
  // monotone on them and the order is preserved.
  return Polynomial::from_sorted_terms(f.ring(), std::move(terms));
}

Polynomial phi_eval(const CartierOp& op, const Polynomial& f) {
  require_same_ring(op.ring(), f.ring());
  return trace_map(op.premultiplier() * f, op.level());
}

Ideal cartier_apply(const CartierOp& op, const Ideal& j) {
  require_same_ring(op.ring(), j.ring());
  std::vector<Polynomial> gens;
  // One generator product at a time keeps peak term counts down.
  for (const auto& g : j.generators()) {
    for (auto& [residue, coeff] : basis_expansion(op.premultiplier() * g, op.level()))
      gens.push_back(std::move(coeff));
  }
  return Ideal(j.ring(), std::move(gens));
}

CartierOp cartier_compose(const CartierOp& outer, const CartierOp& inner) {
  require_same_ring(outer.ring(), inner.ring());
  Polynomial u = frobenius_power(outer.premultiplier(), inner.level()) * inner.premultiplier();
  return CartierOp(std::move(u), outer.level() + inner.level());
}

}  // namespace frobkit
