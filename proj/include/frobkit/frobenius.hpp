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

// Frobenius bracket powers, p^e-th roots of ideals and p^{-e}-linear maps.
//
// F^e_* S is free over S on the monomials x^i with 0 <= i_j < p^e, so every
// f has a unique expansion f = sum_i f_i^{p^e} x^i. Over F_p the p-th root of
// a coefficient is the coefficient itself, which is why the f_i below are
// read off by integer division of exponents and no field root is ever taken.

#include <cstdint>
#include <map>

#include "frobkit/groebner.hpp"
#include "frobkit/polyring.hpp"

namespace frobkit {

// p^e; throws OverflowError above 2^32 - 1.
std::uint64_t frobenius_q(std::uint32_t p, std::uint64_t e);

// f^{p^e}: exponents scaled by p^e, coefficients unchanged.
Polynomial frobenius_power(const Polynomial& f, std::uint64_t e);

// The coefficients f_i of f = sum_i f_i^{p^e} x^i, keyed by the basis
// exponent i. Zero coefficients are omitted.
std::map<Monomial, Polynomial> basis_expansion(const Polynomial& f, std::uint64_t e);

// I^{[p^e]} = <g^{p^e} : g generator of I>.
Ideal bracket_power(const Ideal& ideal, std::uint64_t e);

// Smallest K with J subset K^{[p^e]}.
Ideal pe_root(const Ideal& j, std::uint64_t e);

// The p^{-e}-linear map f -> Phi^e(u*f), where Phi^e picks the coefficient of
// the basis monomial (x_1...x_n)^{p^e-1}.
class CartierOp {
 public:
  CartierOp(Polynomial premultiplier, std::uint64_t level);

  const Ring& ring() const noexcept { return premult_.ring(); }
  const Polynomial& premultiplier() const noexcept { return premult_; }
  std::uint64_t level() const noexcept { return level_; }
  // p^level
  std::uint64_t q() const noexcept { return q_; }

  friend bool operator==(const CartierOp&, const CartierOp&) = default;

 private:
  Polynomial premult_;
  std::uint64_t level_;
  std::uint64_t q_;
};

// Phi^e applied to f directly, without a premultiplier.
Polynomial trace_map(const Polynomial& f, std::uint64_t e);

Polynomial phi_eval(const CartierOp& op, const Polynomial& f);

// The ideal generated by op(g*m) over generators g and basis monomials m;
// equal to pe_root(u*J, e).
Ideal cartier_apply(const CartierOp& op, const Ideal& j);

// outer o inner, at level e_outer + e_inner with premultiplier
// u_outer^{p^{e_inner}} * u_inner.
CartierOp cartier_compose(const CartierOp& outer, const CartierOp& inner);

}  // namespace frobkit
