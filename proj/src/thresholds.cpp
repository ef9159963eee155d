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

#include "frobkit/thresholds.hpp"

#include <exception>
#include <limits>
#include <stdexcept>

#include "frobkit/frobenius.hpp"
#include "frobkit/kernels.hpp"
#include "frobkit/purity.hpp"

namespace frobkit {

namespace {

Ideal locality_point(const Ring& ring, const std::optional<Ideal>& at) {
  if (!at) return Ideal::maximal(ring);
  require_same_ring(ring, at->ring());
  return *at;
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw OverflowError(std::string(what) + " out of range");
  return static_cast<std::uint64_t>(v);
}

// f != 0, at proper, f in at.
void check_nu_domain(const Polynomial& f, const Ideal& point, const GbOptions& options) {
  if (f.is_zero()) throw DomainError("f is zero");
  if (point.is_unit(options)) throw DomainError("locality ideal must be proper");
  if (!point.contains(f, options)) throw DomainError("f is not in the locality ideal; nu is undefined");
}

// Largest l >= lo with f^l not in the quotient, where `mul` multiplies and
// reduces; `start` is f^lo already reduced and nonzero.
template <typename Mul>
std::uint64_t climb(Polynomial start, const Polynomial& f_reduced, std::uint64_t lo, Mul mul) {
  std::uint64_t l = lo;
  for (;;) {
    Polynomial next = mul(start, f_reduced);
    if (next.is_zero()) return l;
    start = std::move(next);
    ++l;
  }
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t modulus) {
  if (modulus == 1) return 1;
  std::uint64_t x = p % modulus;
  std::uint64_t c = 1;
  while (x != 1) {
    x = x * p % modulus;  // modulus <= 2^32 and p < 2^31
    ++c;
  }
  return c;
}

}  // namespace

std::vector<std::uint64_t> nu_sequence(const Polynomial& f, std::uint64_t e_max,
                                       const std::optional<Ideal>& at, const GbOptions& options) {
  if (e_max < 1) throw DomainError("e must be at least 1");
  Ideal point = locality_point(f.ring(), at);
  check_nu_domain(f, point, options);
  const std::uint32_t p = f.decl().characteristic();
  std::vector<std::uint64_t> out;
  std::uint64_t prev = 0;
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_q(p, e);
    // nu(p^e) >= p * nu(p^{e-1}), so the climb starts there.
    const std::uint64_t lo = p * prev;
    std::uint64_t value;
    if (point.is_variable_generated()) {
      auto caps = bracket_caps(point, q);
      Polynomial fr = kernels::truncate(f, caps);
      Polynomial start = kernels::truncated_power(f, lo, caps);
      if (start.is_zero()) throw std::logic_error("nu: lower bound already in the bracket power");
      value = climb(std::move(start), fr, lo, [&](const Polynomial& a, const Polynomial& b) {
        return kernels::truncated_multiply(a, b, caps);
      });
    } else {
      Ideal bracket = bracket_power(point, e);
      const auto& gb = bracket.basis(options);
      Polynomial base = reduce(f, gb);
      Polynomial start = reduce(Polynomial::constant(f.ring(), 1), gb);
      for (std::uint64_t b = lo; b > 0; b >>= 1) {
        if (b & 1) start = reduce(start * base, gb);
        if (b > 1) base = reduce(base * base, gb);
      }
      Polynomial fr = reduce(f, gb);
      if (start.is_zero()) throw std::logic_error("nu: lower bound already in the bracket power");
      value = climb(std::move(start), fr, lo, [&](const Polynomial& a, const Polynomial& b) {
        return reduce(a * b, gb);
      });
    }
    out.push_back(value);
    prev = value;
  }
  return out;
}

std::uint64_t nu(const Polynomial& f, std::uint64_t e, const std::optional<Ideal>& at,
                 const GbOptions& options) {
  return nu_sequence(f, e, at, options).back();
}

FptResult fpt_bounds(const Polynomial& f, std::uint64_t e_max, const std::optional<Ideal>& at,
                     const GbOptions& options) {
  auto values = nu_sequence(f, e_max, at, options);
  FptResult r;
  r.prime = f.decl().characteristic();
  for (std::uint64_t e = 1; e <= e_max; ++e) r.nus.emplace_back(e, values[e - 1]);
  const BigInt q = frobenius_q(r.prime, e_max);
  r.lower = Rational(BigInt(values.back()), q);
  r.upper = Rational(BigInt(values.back()) + 1, q);
  return r;
}

bool fpure_pair(const Polynomial& f, const Rational& t, std::uint64_t e,
                const std::optional<Ideal>& at, const GbOptions& options) {
  if (t < Rational(0)) throw DomainError("t must be nonnegative");
  Ideal point = locality_point(f.ring(), at);
  check_nu_domain(f, point, options);
  const std::uint64_t q = frobenius_q(f.decl().characteristic(), e);
  const std::uint64_t k = to_u64((t * Rational(BigInt(q - 1))).ceil(), "exponent");
  Polynomial one[] = {f};
  return !power_product_in_bracket(one, k, point, e, options);
}

Ideal tau_chain_member(const Polynomial& f, const Rational& t, std::uint64_t e) {
  if (t < Rational(0)) throw DomainError("t must be nonnegative");
  const std::uint64_t q = frobenius_q(f.decl().characteristic(), e);
  const std::uint64_t k = to_u64((t * Rational(BigInt(q))).ceil(), "exponent");
  return pe_root(Ideal(f.ring(), {pow(f, k)}), e);
}

TauBudgetExhausted::TauBudgetExhausted(Ideal previous, Ideal last)
    : CapExceeded("tau: chain did not stabilize within budget (last two members " +
                  previous.to_string() + " and " + last.to_string() + ")"),
      previous_(std::move(previous)),
      last_(std::move(last)) {}

Ideal tau_principal(const Polynomial& f, const Rational& t, std::uint64_t e_start,
                    std::size_t budget, const GbOptions& options) {
  if (f.is_zero()) throw DomainError("tau: f is zero");
  if (t < Rational(0)) throw DomainError("t must be nonnegative");
  const Ring& ring = f.ring();
  if (t == Rational(0)) return Ideal::unit(ring);

  const std::uint32_t p = f.decl().characteristic();
  // t = m / (p^b * s') with p not dividing s'.
  BigInt rest = t.den();
  std::uint64_t b = 0;
  while (rest % p == 0) {
    rest /= p;
    ++b;
  }
  const std::uint64_t s_prime = to_u64(rest, "denominator");
  if (s_prime > (std::uint64_t{1} << 32)) throw OverflowError("tau: denominator too large");
  const std::uint64_t c = multiplicative_order(p, s_prime);
  const std::uint64_t q = frobenius_q(p, c);
  const BigInt big_a = t.num() * BigInt(q - 1) / BigInt(s_prime);
  const std::uint64_t k = to_u64(big_a / BigInt(q - 1), "integer part");
  const std::uint64_t a = to_u64(big_a % BigInt(q - 1), "exponent");

  Ideal core = Ideal::unit(ring);
  if (a > 0) {
    const Polynomial fa = pow(f, a);
    auto step = [&](const Ideal& j) {
      std::vector<Polynomial> gens;
      for (const auto& g : j.basis(options)) gens.push_back(fa * g);
      return pe_root(Ideal(ring, std::move(gens)), c);
    };
    Ideal current(ring, {f});
    // Skip ahead to the first level b + n*c >= e_start.
    for (std::uint64_t level = b; level < e_start; level += c) current = step(current);
    for (std::size_t n = 0;; ++n) {
      if (n >= budget) throw TauBudgetExhausted(current, step(current));
      Ideal next = step(current);
      if (!next.contains(current, options)) throw std::logic_error("tau: chain failed to ascend");
      if (ideal_equals(next, current, options)) break;
      current = std::move(next);
    }
    core = std::move(current);
  }

  std::vector<Polynomial> gens;
  const Polynomial fk = pow(f, k);
  for (const auto& g : core.basis(options)) gens.push_back(fk * g);
  Ideal scaled(ring, std::move(gens));
  return b == 0 ? scaled : pe_root(scaled, b);
}

namespace {

struct Grid {
  std::vector<Rational> points;
};

Grid make_grid(const Polynomial& f, const Rational& t_max, std::uint64_t denom_cap) {
  if (f.is_zero()) throw DomainError("jumps: f is zero");
  if (denom_cap < 1) throw DomainError("jumps: denominator cap must be positive");
  if (t_max <= Rational(0)) throw DomainError("jumps: t_max must be positive");
  for (const auto& term : f.terms()) {
    if (term.mono.is_one()) throw DomainError("jumps: f must vanish at the origin");
  }
  const std::uint64_t last = to_u64((t_max * Rational(BigInt(denom_cap))).ceil(), "grid size");
  Grid g;
  g.points.reserve(last + 1);
  for (std::uint64_t k = 0; k <= last; ++k) g.points.emplace_back(BigInt(k), BigInt(denom_cap));
  return g;
}

std::vector<Rational> collect_drops(const Grid& grid, const std::vector<Ideal>& taus,
                                    const GbOptions& options) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < taus.size(); ++k) {
    if (!ideal_equals(taus[k - 1], taus[k], options)) out.push_back(grid.points[k]);
  }
  return out;
}

}  // namespace

std::vector<Rational> jumping_numbers_serial(const Polynomial& f, const Rational& t_max,
                                             std::uint64_t denom_cap, std::uint64_t e_level,
                                             std::size_t budget, const GbOptions& options) {
  Grid grid = make_grid(f, t_max, denom_cap);
  std::vector<Ideal> taus;
  taus.reserve(grid.points.size());
  for (const auto& t : grid.points) taus.push_back(tau_principal(f, t, e_level, budget, options));
  return collect_drops(grid, taus, options);
}

std::vector<Rational> jumping_numbers(const Polynomial& f, const Rational& t_max,
                                      std::uint64_t denom_cap, std::uint64_t e_level,
                                      std::size_t budget, const GbOptions& options) {
  Grid grid = make_grid(f, t_max, denom_cap);
  const auto n = static_cast<std::ptrdiff_t>(grid.points.size());
  std::vector<std::optional<Ideal>> slots(grid.points.size());
  std::vector<std::exception_ptr> failures(grid.points.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      Ideal tau = tau_principal(f, grid.points[idx], e_level, budget, options);
      tau.basis(options);
      slots[idx] = std::move(tau);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  // Report the first failure in grid order.
  for (const auto& err : failures) {
    if (err) std::rethrow_exception(err);
  }
  std::vector<Ideal> taus;
  taus.reserve(slots.size());
  for (auto& s : slots) taus.push_back(std::move(*s));
  return collect_drops(grid, taus, options);
}

}  // namespace frobkit
