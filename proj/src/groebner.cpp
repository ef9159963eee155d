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

#include "frobkit/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <utility>

namespace frobkit {

namespace detail {

struct GbCache {
  std::mutex mutex;
  std::optional<std::vector<Polynomial>> basis;
};

}  // namespace detail

namespace {

std::atomic<std::size_t> g_default_pair_cap{kDefaultPairCap};

// Buchberger's algorithm with the Gebauer-Moeller update and the normal
// selection strategy (smallest lcm first, ties by creation order).
class Buchberger {
 public:
  Buchberger(Ring ring, const GbOptions& options) : ring_(std::move(ring)), options_(options) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
      require_same_ring(ring_, g.ring());
      Polynomial r = reduce_by_basis(g);
      if (!r.is_zero()) insert(r.monic());
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        int c = compare(a.lcm, b.lcm, ring_->order());
        return c != 0 ? c < 0 : a.seq < b.seq;
      });
      Pair pair = std::move(*best);
      pairs_.erase(best);
      if (++reductions_ > options_.pair_cap) {
        throw CapExceeded("groebner pair cap of " + std::to_string(options_.pair_cap) +
                          " reductions exceeded");
      }
      Polynomial r = reduce_by_basis(s_polynomial(pair));
      if (!r.is_zero()) insert(r.monic());
    }
    return reduced_basis();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::size_t seq;
  };

  Polynomial s_polynomial(const Pair& pair) const {
    const Polynomial& a = polys_[pair.i];
    const Polynomial& b = polys_[pair.j];
    Polynomial s = a.mul_term(1, pair.lcm / a.leading_monomial());
    return s.sub_mul_term(1, pair.lcm / b.leading_monomial(), b);
  }

  Polynomial reduce_by_basis(const Polynomial& f) const {
    std::vector<const Polynomial*> divisors;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) divisors.push_back(&polys_[k]);
    }
    const Prime& field = ring_->field();
    Polynomial p = f;
    std::vector<Term> rem;
    while (!p.is_zero()) {
      const Term& lt = p.leading_term();
      const Polynomial* hit = nullptr;
      for (const Polynomial* g : divisors) {
        if (g->leading_monomial().divides(lt.mono)) {
          hit = g;
          break;
        }
      }
      if (hit) {
        Coeff c = field.mul(lt.coeff, field.inv(hit->leading_coeff()));
        p = p.sub_mul_term(c, lt.mono / hit->leading_monomial(), *hit);
      } else {
        rem.push_back(lt);
        p = p.tail();
      }
    }
    return Polynomial::from_sorted_terms(ring_, std::move(rem));
  }

  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(false);

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    // Chain criterion among the new pairs.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          cands[a].alive = false;
          break;
        }
      }
    }
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& pr) {
      if (!lh.divides(pr.lcm)) return false;
      Monomial li = polys_[pr.i].leading_monomial().lcm(lh);
      Monomial lj = polys_[pr.j].leading_monomial().lcm(lh);
      return li != pr.lcm && lj != pr.lcm;
    });
    // First criterion: coprime leading monomials never need reduction.
    for (auto& c : cands) {
      if (c.alive && !c.coprime) pairs_.push_back({c.g, hi, std::move(c.lcm), next_seq_++});
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
    active_[hi] = true;
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(polys_[k]);
    }
    // Minimality: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
        if (a == b) continue;
        const auto& la = basis[a].leading_monomial();
        const auto& lb = basis[b].leading_monomial();
        redundant = lb.divides(la) && (lb != la || b < a);
      }
      if (!redundant) minimal.push_back(basis[a]);
    }
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Polynomial> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (a != b) others.push_back(minimal[b]);
      }
      minimal[a] = reduce(minimal[a], others).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
      return compare(x.leading_monomial(), y.leading_monomial(), ring_->order()) > 0;
    });
    return minimal;
  }

  Ring ring_;
  const GbOptions& options_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t next_seq_ = 0;
  std::size_t reductions_ = 0;
};

Polynomial embed(const Polynomial& f, const Ring& ext, Exponent aux_exp) {
  std::vector<Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    Monomial m(ext->num_vars());
    m[0] = aux_exp;
    for (std::size_t i = 0; i < t.mono.size(); ++i) m[i + 1] = t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial project(const Polynomial& f, const Ring& base) {
  std::vector<Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    Monomial m(base->num_vars());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = t.mono[i + 1];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(base, std::move(terms));
}

// The ring with one fresh leading variable, eliminated first.
Ring elimination_ring(const Ring& base) {
  std::string aux = "_t";
  for (int k = 0; base->index_of(aux); ++k) aux = "_t" + std::to_string(k);
  std::vector<std::string> vars{aux};
  vars.insert(vars.end(), base->vars().begin(), base->vars().end());
  return std::make_shared<const RingDecl>(std::move(vars), base->field(),
                                          MonomialOrder{base->order().kind, 1});
}

}  // namespace

std::size_t default_pair_cap() noexcept { return g_default_pair_cap.load(); }
void set_default_pair_cap(std::size_t cap) noexcept { g_default_pair_cap.store(cap); }

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {}

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : Ideal(std::move(ring)) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::basis(const GbOptions& options) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->basis) return *cache_->basis;
  }
  auto computed = compute_groebner_basis(gens_, options);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = std::move(computed);
  return *cache_->basis;
}

bool Ideal::is_unit(const GbOptions& options) const {
  for (const auto& g : gens_) {
    if (g.is_constant()) return true;
  }
  const auto& b = basis(options);
  return b.size() == 1 && b[0].is_constant();
}

bool Ideal::contains(const Polynomial& f, const GbOptions& options) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return true;
  return reduce(f, basis(options)).is_zero();
}

bool Ideal::contains(const Ideal& other, const GbOptions& options) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g, options); });
}

bool Ideal::is_variable_generated() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) {
    return g.num_terms() == 1 && g.leading_coeff() == 1 && g.leading_monomial().total_degree() == 1;
  });
}

std::string Ideal::to_string() const {
  const auto& b = basis();
  if (b.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) out += ", ";
    out += b[k].to_string();
  }
  return out + ">";
}

Ideal parse_ideal(std::string_view src, const Ring& ring) {
  std::size_t offset = 0;
  auto first = src.find_first_not_of(" \t\n");
  auto last = src.find_last_not_of(" \t\n");
  if (first != std::string_view::npos && src[first] == '<') {
    if (src[last] != '>') throw ParseError("expected '>'", last);
    offset = first + 1;
    src = src.substr(first + 1, last - first - 1);
  }
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  for (;;) {
    std::size_t stop = src.find_first_of(";,", start);
    std::string_view piece = src.substr(start, stop == std::string_view::npos ? stop : stop - start);
    try {
      gens.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      // Re-anchor the position to the whole argument.
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position "));
      throw ParseError(msg, e.position() + start + offset);
    }
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------- algorithms

std::vector<Polynomial> compute_groebner_basis(std::span<const Polynomial> gens,
                                               const GbOptions& options) {
  if (gens.empty()) return {};
  return Buchberger(gens.front().ring(), options).run(gens);
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const GbOptions& options) {
  return ideal.basis(options);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  const Prime& field = f.decl().field();
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      Coeff c = field.mul(lt.coeff, field.inv(hit->leading_coeff()));
      p = p.sub_mul_term(c, lt.mono / hit->leading_monomial(), *hit);
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(rem));
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const GbOptions& options) {
  require_same_ring(f.ring(), ideal.ring());
  return reduce(f, ideal.basis(options));
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& g) {
  require_same_ring(h.ring(), g.ring());
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  const Prime& field = h.decl().field();
  Coeff inv_lc = field.inv(g.leading_coeff());
  Polynomial r = h;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) throw DomainError("inexact division");
    Term q{lt.mono / g.leading_monomial(), field.mul(lt.coeff, inv_lc)};
    r = r.sub_mul_term(q.coeff, q.mono, g);
    quotient.push_back(std::move(q));
  }
  // Quotient terms are produced in descending order.
  return Polynomial::from_sorted_terms(h.ring(), std::move(quotient));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GbOptions& options) {
  require_same_ring(a.ring(), b.ring());
  const Ring& base = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(base);
  if (a.is_unit(options)) return b;
  if (b.is_unit(options)) return a;
  Ring ext = elimination_ring(base);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * embed(f, ext, 0));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext, 0));
  std::vector<Polynomial> kept;
  for (const auto& g : compute_groebner_basis(gens, options)) {
    if (g.leading_monomial()[0] == 0) kept.push_back(project(g, base));
  }
  return Ideal(base, std::move(kept));
}

Ideal ideal_colon(const Ideal& i, const Ideal& j, const GbOptions& options) {
  require_same_ring(i.ring(), j.ring());
  if (j.is_zero()) throw DomainError("colon by the zero ideal");
  if (i.is_unit(options)) return Ideal::unit(i.ring());
  std::optional<Ideal> result;
  for (const auto& g : j.generators()) {
    Ideal meet = ideal_intersect(i, Ideal(i.ring(), {g}), options);
    std::vector<Polynomial> quotients;
    for (const auto& h : meet.basis(options)) quotients.push_back(divide_exact(h, g));
    Ideal piece(i.ring(), std::move(quotients));
    result = result ? ideal_intersect(*result, piece, options) : piece;
  }
  return *result;
}

bool ideal_equals(const Ideal& a, const Ideal& b, const GbOptions& options) {
  require_same_ring(a.ring(), b.ring());
  return a.basis(options) == b.basis(options);
}

}  // namespace frobkit
