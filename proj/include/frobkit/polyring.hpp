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

// Sparse multivariate polynomials over a prime field F_p.
//
// A Polynomial is an immutable value: a shared ring declaration plus a term
// list kept sorted in descending monomial order with no zero coefficients.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "frobkit/errors.hpp"

namespace frobkit {

using Coeff = std::uint32_t;
using Exponent = std::uint32_t;

// A prime characteristic p with 2 <= p < 2^31.
class Prime {
 public:
  static constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;

  explicit Prime(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept;
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(std::uint64_t{a} * b % p_);
  }
  // Inverse of a nonzero element via extended Euclid.
  Coeff inv(Coeff a) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

enum class OrderKind { grevlex, lex, grlex };

std::string_view to_string(OrderKind kind) noexcept;
OrderKind parse_order(std::string_view name);

// A monomial order. When elim_block > 0 the first elim_block variables form a
// block that is compared first (grevlex inside the block); the remaining
// variables are then compared with `kind`. Only used internally for
// elimination.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t elim_block = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 4>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }
  auto begin() const noexcept { return exps_.begin(); }
  auto end() const noexcept { return exps_.end(); }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  // Checked product; throws OverflowError past 2^32 - 1.
  Monomial operator*(const Monomial& other) const;
  // Exponent-wise difference; requires divides(*this, other) in reverse.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  // Every exponent multiplied by `factor`, checked.
  Monomial scaled(std::uint64_t factor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                  b.exps_.begin(), b.exps_.end());
  }

 private:
  Storage exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Three-way comparison under a monomial order: negative, zero, positive.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) noexcept;

class RingDecl {
 public:
  RingDecl(std::vector<std::string> vars, Prime p, MonomialOrder order = {});

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const Prime& field() const noexcept { return prime_; }
  std::uint32_t characteristic() const noexcept { return prime_.value(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  friend bool operator==(const RingDecl&, const RingDecl&) = default;

 private:
  std::vector<std::string> vars_;
  Prime prime_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingDecl>;

Ring make_ring(std::vector<std::string> vars, std::uint64_t p,
               OrderKind kind = OrderKind::grevlex);

bool same_ring(const Ring& a, const Ring& b) noexcept;
// Throws DomainError("ring mismatch") unless same_ring(a, b).
void require_same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, Monomial m, Coeff c = 1);
  // Combines duplicate monomials, drops zeros and sorts. Coefficients must
  // already be reduced mod p.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  // Terms must be sorted descending, distinct and nonzero.
  static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const RingDecl& decl() const noexcept { return *ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  // Undefined on the zero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const noexcept;
  Polynomial monic() const;
  // Everything but the leading term.
  Polynomial tail() const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  // this - c*m*g, merged in one pass.
  Polynomial sub_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

// f^k by repeated squaring.
Polynomial pow(const Polynomial& f, std::uint64_t k);

// Parses the expression grammar; coefficients are reduced mod p.
Polynomial parse_poly(std::string_view src, const Ring& ring);

std::string monomial_to_string(const Monomial& m, const RingDecl& ring);

}  // namespace frobkit
