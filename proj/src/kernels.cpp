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

#include "frobkit/kernels.hpp"

#include <exception>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frobkit::kernels {

namespace {

using Accumulator = std::unordered_map<Monomial, std::uint64_t, MonomialHash>;

bool survives(const Monomial& m, std::span<const std::uint64_t> caps) noexcept {
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (m[i] >= caps[i]) return false;
  }
  return true;
}

// Serial reference: ordered map keyed by raw exponent vector.
Polynomial product_serial(const Polynomial& a, const Polynomial& b,
                          std::span<const std::uint64_t> caps) {
  const Prime& f = a.decl().field();
  std::map<Monomial, Coeff> acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Monomial m = s.mono * t.mono;
      if (!caps.empty() && !survives(m, caps)) continue;
      Coeff c = f.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second = f.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

Polynomial product_parallel(const Polynomial& a, const Polynomial& b,
                            std::span<const std::uint64_t> caps) {
  const std::uint64_t p = a.decl().characteristic();
  auto lhs = a.terms();
  auto rhs = b.terms();
  const int nthreads = max_threads();
  std::vector<Accumulator> partial(static_cast<std::size_t>(nthreads));
  std::exception_ptr failure;

#pragma omp parallel num_threads(nthreads)
  {
#ifdef _OPENMP
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& acc = partial[0];
#endif
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lhs.size()); ++i) {
      try {
        const Term& s = lhs[static_cast<std::size_t>(i)];
        for (const auto& t : rhs) {
          Monomial m = s.mono * t.mono;
          if (!caps.empty() && !survives(m, caps)) continue;
          auto& slot = acc[std::move(m)];
          slot = (slot + std::uint64_t{s.coeff} * t.coeff) % p;
        }
      } catch (...) {
#pragma omp critical(frobkit_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator& merged = partial[0];
  for (std::size_t k = 1; k < partial.size(); ++k) {
    for (auto& [m, c] : partial[k]) {
      auto& slot = merged[m];
      slot = (slot + c) % p;
    }
  }
  std::vector<Term> terms;
  terms.reserve(merged.size());
  for (auto& [m, c] : merged) {
    if (c != 0) terms.push_back({m, static_cast<Coeff>(c)});
  }
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

bool worth_parallel(const Polynomial& a, const Polynomial& b) noexcept {
  return max_threads() > 1 && a.num_terms() * b.num_terms() >= kParallelThreshold;
}

}  // namespace

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Polynomial multiply_serial(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  return product_serial(a, b, {});
}

Polynomial multiply_parallel(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  return product_parallel(a, b, {});
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.num_terms() == 1) return b.mul_term(a.leading_coeff(), a.leading_monomial());
  if (b.num_terms() == 1) return a.mul_term(b.leading_coeff(), b.leading_monomial());
  return worth_parallel(a, b) ? product_parallel(a, b, {}) : product_serial(a, b, {});
}

Polynomial truncated_multiply_serial(const Polynomial& a, const Polynomial& b,
                                     std::span<const std::uint64_t> caps) {
  require_same_ring(a.ring(), b.ring());
  return product_serial(a, b, caps);
}

Polynomial truncated_multiply_parallel(const Polynomial& a, const Polynomial& b,
                                       std::span<const std::uint64_t> caps) {
  require_same_ring(a.ring(), b.ring());
  return product_parallel(a, b, caps);
}

Polynomial truncated_multiply(const Polynomial& a, const Polynomial& b,
                              std::span<const std::uint64_t> caps) {
  require_same_ring(a.ring(), b.ring());
  return worth_parallel(a, b) ? product_parallel(a, b, caps) : product_serial(a, b, caps);
}

Polynomial truncated_power(const Polynomial& f, std::uint64_t k,
                           std::span<const std::uint64_t> caps) {
  Polynomial result = truncate(Polynomial::constant(f.ring(), 1), caps);
  Polynomial base = truncate(f, caps);
  while (k > 0 && !result.is_zero()) {
    if (k & 1) result = truncated_multiply(result, base, caps);
    k >>= 1;
    if (k) base = truncated_multiply(base, base, caps);
  }
  return result;
}

Polynomial truncate(const Polynomial& f, std::span<const std::uint64_t> caps) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (survives(t.mono, caps)) kept.push_back(t);
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(kept));
}

}  // namespace frobkit::kernels
