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

// Term-level kernels behind polynomial products.
//
// Each kernel has a serial reference implementation (kept for tests and
// benchmarks) and an OpenMP implementation that splits the outer operand
// across threads. `multiply` and `truncated_multiply` pick between them by
// problem size; both paths return identical canonical polynomials.

#include <cstddef>
#include <span>

#include "frobkit/polyring.hpp"

namespace frobkit::kernels {

// Products with fewer than this many term pairs stay serial.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

Polynomial multiply_serial(const Polynomial& a, const Polynomial& b);
Polynomial multiply_parallel(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

// Product modulo the monomial ideal <x_i^caps[i]>: product terms with any
// exponent e_i >= caps[i] are dropped. Reduction modulo a monomial ideal is a
// ring map, so iterating this computes powers in the quotient exactly.
Polynomial truncated_multiply_serial(const Polynomial& a, const Polynomial& b,
                                     std::span<const std::uint64_t> caps);
Polynomial truncated_multiply_parallel(const Polynomial& a, const Polynomial& b,
                                       std::span<const std::uint64_t> caps);
Polynomial truncated_multiply(const Polynomial& a, const Polynomial& b,
                              std::span<const std::uint64_t> caps);

// f^k modulo <x_i^caps[i]>, by repeated squaring in the quotient.
Polynomial truncated_power(const Polynomial& f, std::uint64_t k,
                           std::span<const std::uint64_t> caps);

// Drops every term of f that lies in <x_i^caps[i]>.
Polynomial truncate(const Polynomial& f, std::span<const std::uint64_t> caps);

int max_threads() noexcept;

}  // namespace frobkit::kernels
