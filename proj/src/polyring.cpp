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

#include "frobkit/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>
#include <utility>

#include "frobkit/kernels.hpp"

namespace frobkit {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Exponent>::max();

Exponent checked_exponent(std::uint64_t v) {
  if (v > kMaxExponent) throw OverflowError("exponent overflow");
  return static_cast<Exponent>(v);
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

// ---------------------------------------------------------------- Prime

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) {
  if (p >= kLimit) throw DomainError("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

Coeff Prime::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff Prime::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return reduce(s0);
}

// ---------------------------------------------------------------- orders

std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
  }
  return "grevlex";
}

OrderKind parse_order(std::string_view name) {
  if (name == "grevlex") return OrderKind::grevlex;
  if (name == "lex") return OrderKind::lex;
  if (name == "grlex") return OrderKind::grlex;
  throw DomainError("unknown monomial order '" + std::string(name) + "'");
}

namespace {

std::uint64_t degree_of(std::span<const Exponent> e) noexcept {
  std::uint64_t d = 0;
  for (Exponent x : e) d += x;
  return d;
}

int cmp_lex(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_revlex_tail(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_kind(std::span<const Exponent> a, std::span<const Exponent> b, OrderKind kind) noexcept {
  if (kind != OrderKind::lex) {
    std::uint64_t da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db ? 1 : -1;
  }
  return kind == OrderKind::grevlex ? cmp_revlex_tail(a, b) : cmp_lex(a, b);
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) noexcept {
  auto ea = a.exponents();
  auto eb = b.exponents();
  if (order.elim_block > 0) {
    std::size_t k = order.elim_block;
    if (int c = cmp_kind(ea.first(k), eb.first(k), OrderKind::grevlex); c != 0) return c;
    return cmp_kind(ea.subspan(k), eb.subspan(k), order.kind);
  }
  return cmp_kind(ea, eb, order.kind);
}

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::total_degree() const noexcept { return degree_of(exponents()); }

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r(*this);
  for (auto& e : r.exps_) {
    if (e != 0 && factor > kMaxExponent / e) throw OverflowError("exponent overflow");
    e = static_cast<Exponent>(e * factor);
  }
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------- RingDecl

RingDecl::RingDecl(std::vector<std::string> vars, Prime p, MonomialOrder order)
    : vars_(std::move(vars)), prime_(p), order_(order) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (order_.elim_block > vars_.size()) throw DomainError("elimination block exceeds ring");
}

std::optional<std::size_t> RingDecl::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> vars, std::uint64_t p, OrderKind kind) {
  return std::make_shared<const RingDecl>(std::move(vars), Prime(p), MonomialOrder{kind, 0});
}

bool same_ring(const Ring& a, const Ring& b) noexcept { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw DomainError("ring mismatch");
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Coeff r = ring->field().reduce(c);
  Polynomial p(ring);
  if (r != 0) p.terms_.push_back({Monomial(ring->num_vars()), r});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  Monomial m(ring->num_vars());
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->characteristic();
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, order) > 0;
  });
  const Prime& f = ring->field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return from_sorted_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  const Prime& f = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, f.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  const Prime& f = ring_->field();
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::sub_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const {
  const Prime& f = ring_->field();
  const auto& order = ring_->order();
  Coeff nc = f.neg(c % ring_->characteristic());
  Polynomial r(ring_);
  if (nc == 0) return *this;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  while (jt != g.terms_.end()) {
    Monomial gm = jt->mono * m;
    while (it != terms_.end() && compare(it->mono, gm, order) > 0) r.terms_.push_back(*it++);
    Coeff gc = f.mul(jt->coeff, nc);
    if (it != terms_.end() && it->mono == gm) {
      Coeff s = f.add(it->coeff, gc);
      if (s != 0) r.terms_.push_back({std::move(gm), s});
      ++it;
    } else {
      r.terms_.push_back({std::move(gm), gc});
    }
    ++jt;
  }
  r.terms_.insert(r.terms_.end(), it, terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->characteristic() - 1); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  return a.sub_mul_term(a.ring_->characteristic() - 1, Monomial(a.ring_->num_vars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  return a.sub_mul_term(1, Monomial(a.ring_->num_vars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  return kernels::multiply(a, b);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  if (k == 0) return result;
  if (f.is_zero()) return f;
  if (f.num_terms() == 1) {
    const Term& t = f.leading_term();
    Coeff c = 1, base = t.coeff;
    const Prime& field = f.decl().field();
    for (std::uint64_t e = k; e > 0; e >>= 1) {
      if (e & 1) c = field.mul(c, base);
      base = field.mul(base, base);
    }
    return Polynomial::monomial(f.ring(), t.mono.scaled(k), c);
  }
  // Exponent bound check up front so overflow never happens mid-expansion.
  for (const auto& t : f.terms()) (void)t.mono.scaled(k);
  Polynomial base = f;
  for (std::uint64_t e = k;;) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- printing

std::string monomial_to_string(const Monomial& m, const RingDecl& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += monomial_to_string(t.mono, *ring_);
    } else {
      out += std::to_string(t.coeff);
      out += '*';
      out += monomial_to_string(t.mono, *ring_);
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool starts_factor() const {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    skip_ws();
    if (!starts_factor()) {
      if (at_end()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    }
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!starts_factor()) throw ParseError("expected factor after '*'", pos_);
      } else if (!starts_factor()) {
        break;
      }
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    Polynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t epos = pos_;
      std::uint64_t k = uint_literal("exponent");
      if (k > kMaxExponent) throw ParseError("exponent overflow", epos);
      return pow(base, k);
    }
    return base;
  }

  std::uint64_t uint_literal(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      int d = src_[pos_] - '0';
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        throw ParseError(std::string(what) + " overflow", start);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Coefficients reduce digit by digit, so length is unbounded.
      std::uint64_t p = ring_->characteristic();
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = (v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string_view name = src_.substr(start, pos_ - start);
    if (auto idx = ring_->index_of(name)) return Polynomial::variable(ring_, *idx);
    // Juxtaposed variables such as "xy" when x and y are declared.
    std::vector<std::size_t> parts;
    if (split_identifier(name, parts)) {
      Monomial m(ring_->num_vars());
      for (std::size_t i : parts) m[i] += 1;
      return Polynomial::monomial(ring_, std::move(m), 1);
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", start);
  }

  // Longest-match-first split of `name` into declared variable names.
  bool split_identifier(std::string_view name, std::vector<std::size_t>& parts) const {
    if (name.empty()) return true;
    for (std::size_t len = name.size(); len > 0; --len) {
      if (auto idx = ring_->index_of(name.substr(0, len))) {
        parts.push_back(*idx);
        if (split_identifier(name.substr(len), parts)) return true;
        parts.pop_back();
      }
    }
    return false;
  }

  std::string_view src_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, const Ring& ring) { return Parser(src, ring).parse(); }

}  // namespace frobkit
