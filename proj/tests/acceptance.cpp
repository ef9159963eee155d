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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobkit/cartier.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/groebner.hpp"
#include "frobkit/purity.hpp"
#include "frobkit/thresholds.hpp"
#include "test_support.hpp"

namespace frobkit {
namespace {

using testing::I;
using testing::NaivePoly;
using testing::P;

struct Check {
  std::ostringstream log;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 5) log << "    failed: " << what << "\n";
    }
  }
};

Rational R(const char* s) { return Rational::parse(s); }

void fedder_suite(Check& c) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto r = make_ring({"x", "y"}, p);
    c.expect(fedder_hypersurface(P(r, "xy")), "xy F-pure at p=" + std::to_string(p));
    c.expect(!fedder_hypersurface(P(r, "x^3 - y^2")), "cusp not F-pure at p=" + std::to_string(p));
    auto r3 = make_ring({"x", "y", "z"}, p);
    bool pinch = fedder_hypersurface(P(r3, "x y^2 - z^2"));
    c.expect(pinch == (p != 2), "pinch point at p=" + std::to_string(p));
  }
}

void elliptic_cone(Check& c) {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    auto r = make_ring({"x", "y", "z"}, p);
    Polynomial f = P(r, "x^3 + y^3 + z^3");
    const bool expected = p == 7 || p == 13;
    bool got = fedder_ideal(Ideal(r, {f}));
    bool oracle = !testing::naive_in_frobenius_max(NaivePoly::from(f).power(p - 1, 3), p);
    c.expect(got == expected, "elliptic cone at p=" + std::to_string(p));
    c.expect(oracle == expected, "multinomial oracle at p=" + std::to_string(p));
    c.expect(fedder_hypersurface(f) == expected, "hypersurface path at p=" + std::to_string(p));
  }
}

void fpt_bracket(Check& c) {
  auto r = make_ring({"x", "y"}, 7);
  Polynomial f = P(r, "x^3 - y^2");
  FptResult res = fpt_bounds(f, 2);
  c.expect(res.nus.size() == 2 && res.nus[0].second == 5 && res.nus[1].second == 40,
           "nu(7) = 5 and nu(49) = 40");
  c.expect(testing::naive_nu(f, 7) == 5 && testing::naive_nu(f, 49) == 40, "nu oracle");
  c.expect(res.lower < R("5/6") && R("5/6") <= res.upper, "5/6 in (lower, upper]");
  c.expect(res.upper - res.lower == R("1/49"), "width 1/49");
  c.expect(res.lower == R("40/49") && res.upper == R("41/49"), "bounds 40/49, 41/49");
}

void tau_grid(Check& c) {
  auto r = make_ring({"x", "y"}, 7);
  Polynomial f = P(r, "x^3 - y^2");
  c.expect(tau_principal(f, R("1/2")).is_unit(), "tau(1/2) = <1>");
  c.expect(tau_principal(f, R("4/5")).is_unit(), "tau(4/5) = <1>");
  c.expect(!tau_principal(f, R("5/6")).is_unit(), "tau(5/6) proper");
  auto jumps = jumping_numbers(f, R("1"), 42);
  c.expect(jumps == std::vector<Rational>{R("5/6"), R("1")}, "jumps = {5/6, 1}");
}

void monomial_tau(Check& c) {
  const char* grid[] = {"0",   "1/6", "1/4", "1/3", "1/2", "2/3",
                        "3/4", "5/6", "1",   "7/6", "3/2", "2"};
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x"}, p);
    for (Exponent a : {1u, 2u, 3u}) {
      Polynomial f = pow(P(r, "x"), a);
      for (const char* ts : grid) {
        Rational t = R(ts);
        Monomial m(1);
        m[0] = static_cast<Exponent>((t * Rational(a)).floor());
        Ideal want(r, {Polynomial::monomial(r, m)});
        c.expect(ideal_equals(tau_principal(f, t), want),
                 "tau(x^" + std::to_string(a) + ", " + ts + ") at p=" + std::to_string(p));
      }
    }
  }
}

Ideal random_ideal(const Ring& r, std::mt19937_64& rng, Exponent deg) {
  std::uniform_int_distribution<int> ngens(1, 2);
  std::vector<Polynomial> gens;
  for (int k = ngens(rng); k > 0; --k) gens.push_back(testing::random_poly(r, rng, 3, deg));
  return Ideal(r, gens);
}

void root_bracket(Check& c) {
  std::mt19937_64 rng(2026);
  const std::uint64_t primes[] = {2, 3, 5};
  for (int k = 0; k < 500; ++k) {
    const std::uint64_t p = primes[k % 3];
    auto r = make_ring({"x", "y"}, p);
    const std::uint64_t e = 1 + (k / 3) % 2;
    // adjunction: root(J) subset K iff J subset K^[q]
    Ideal j = random_ideal(r, rng, 8);
    Ideal root = pe_root(j, e);
    Ideal k1 = random_ideal(r, rng, 2);
    Ideal k2 = ideal_sum(root, random_ideal(r, rng, 2));
    for (const Ideal* cand : {&root, &k1, &k2}) {
      c.expect(bracket_power(*cand, e).contains(j) == cand->contains(root), "adjunction");
    }
    // exactness: root(I^[q]) = I
    Ideal i = random_ideal(r, rng, 3);
    c.expect(ideal_equals(pe_root(bracket_power(i, e), e), i), "exactness");
    // tower law: root_{e+1} = root_1 o root_e
    c.expect(ideal_equals(pe_root(j, e + 1), pe_root(pe_root(j, e), 1)), "tower law");
  }
}

void composition(Check& c) {
  for (std::uint64_t p : {3, 5}) {
    auto r = make_ring({"x"}, p);
    CartierOp phi(P(r, "1"), 1);
    CartierOp psi(pow(P(r, "x"), p - 1), 1);
    Polynomial one = P(r, "1");
    Polynomial xp = pow(P(r, "x"), p - 1);
    c.expect(phi_eval(phi, xp) == one && phi_eval(psi, one) == one, "phi, psi definitions");
    c.expect(phi_eval(psi, phi_eval(phi, xp)) == one, "psi(phi(x^{p-1})) = 1");
    c.expect(phi_eval(phi, phi_eval(psi, xp)).is_zero(), "phi(psi(x^{p-1})) = 0");
    c.expect(phi_eval(cartier_compose(psi, phi), xp) == one, "composed psi o phi");
    c.expect(phi_eval(cartier_compose(phi, psi), xp).is_zero(), "composed phi o psi");
    c.expect(!(cartier_compose(psi, phi) == cartier_compose(phi, psi)), "non-commutative");

    auto r2 = make_ring({"x", "y"}, p);
    for (std::uint64_t e : {1, 2}) {
      CartierOp op(P(r2, "x y^2 + x^2 + y"), e);
      CartierOp acc = op;
      const std::uint64_t q = op.q();
      for (std::uint64_t n = 2; n <= 3; ++n) {
        acc = cartier_compose(op, acc);
        const std::uint64_t exponent = (frobenius_q(static_cast<std::uint32_t>(p), n * e) - 1) / (q - 1);
        c.expect(acc == CartierOp(pow(op.premultiplier(), exponent), n * e),
                 "self-composition exponent n=" + std::to_string(n));
      }
    }
  }
}

void gauge_contraction(Check& c) {
  std::mt19937_64 rng(88);
  const std::uint64_t primes[] = {2, 3, 5};
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t p = primes[k % 3];
    auto r = make_ring({"x", "y"}, p);
    CartierOp op(testing::random_poly(r, rng, 4, 12), 1 + (k / 3) % 2);
    const Rational q(op.q());
    const Rational big_k(gauge_bound(op));
    Polynomial f = testing::random_poly(r, rng, 5, 40);
    const Rational d(gauge_of(f).clamped());
    Polynomial g = f;
    Rational qn(1);
    for (int n = 1; n <= 3; ++n) {
      g = phi_eval(op, g);
      qn = qn * q;
      GaugeValue got = gauge_of(g);
      if (got.is_minus_infinity()) break;
      c.expect(Rational(got.value()) <= d / qn + big_k / (q - Rational(1)), "contraction bound");
    }
  }
  struct Doc {
    std::uint64_t p;
    const char* u;
    const char* stable;
  };
  for (const Doc& doc : {Doc{2, "1", "1"}, Doc{3, "x^3", "x"}, Doc{3, "x^6", "x^2"}}) {
    auto r = make_ring({"x"}, doc.p);
    auto rep = sigma(CartierOp(P(r, doc.u), 1));
    c.expect(rep.certified && rep.steps <= 5, std::string("sigma certified for u=") + doc.u);
    c.expect(ideal_equals(rep.stable, I(r, doc.stable)), std::string("sigma value for u=") + doc.u);
  }
}

void lattice(Check& c) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto r = make_ring({"x", "y"}, p);
    CartierOp op(pow(P(r, "x y"), p - 1), 1);
    std::vector<Ideal> seeds{I(r, "x"), I(r, "y")};
    std::vector<Ideal> reversed{I(r, "y"), I(r, "x")};
    auto a = lattice_closure(op, seeds, 100);
    auto b = lattice_closure(op, reversed, 100);
    const char* want[] = {"x", "y", "x; y", "x y"};
    c.expect(!a.truncated && a.ideals.size() == 4, "four members at p=" + std::to_string(p));
    for (std::size_t i = 0; i < a.ideals.size() && i < 4; ++i) {
      c.expect(ideal_equals(a.ideals[i], I(r, want[i])), std::string("member ") + want[i]);
      c.expect(is_compatible(op, a.ideals[i]), std::string("compatible ") + want[i]);
    }
    bool same = a.ideals.size() == b.ideals.size();
    for (std::size_t i = 0; same && i < a.ideals.size(); ++i)
      same = a.ideals[i].to_string() == b.ideals[i].to_string();
    c.expect(same, "deterministic order");
  }
}

void groebner_oracle(Check& c) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 3);
  const std::vector<std::string> names{"x", "y", "z"};
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(nvars(rng));
    std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(n));
    auto grev = make_ring(vars, 7, OrderKind::grevlex);
    auto lex = make_ring(vars, 7, OrderKind::lex);
    std::vector<std::string> gens;
    for (int g = ngens(rng); g > 0; --g)
      gens.push_back(testing::random_poly(grev, rng, 3, 4, 4).to_string());
    auto build = [&](const Ring& r) {
      std::vector<Polynomial> ps;
      for (const auto& s : gens) ps.push_back(parse_poly(s, r));
      return Ideal(r, ps);
    };
    Ideal a = build(grev);
    Ideal b = build(lex);
    if (a.is_zero()) continue;
    for (int s = 0; s < 6; ++s) {
      Polynomial probe = testing::random_poly(grev, rng, 3, 3, 4);
      if (s % 2 == 0) probe = probe * a.generators()[static_cast<std::size_t>(s / 2) % a.generators().size()];
      const std::string text = probe.to_string();
      c.expect(a.contains(probe) == b.contains(parse_poly(text, lex)), "grevlex/lex membership");
    }

    Ideal j(grev, {testing::random_poly(grev, rng, 2, 2, 2)});
    if (j.is_zero()) continue;
    Ideal colon = ideal_colon(a, j);
    for (const auto& g : colon.basis())
      for (const auto& h : j.generators()) c.expect(a.contains(g * h), "colon basis adjunction");
    for (int s = 0; s < 4; ++s) {
      Polynomial g = testing::random_poly(grev, rng, 3, 3, 3);
      if (s == 0) g = g * a.generators()[0];
      bool adjoint = true;
      for (const auto& h : j.generators()) adjoint = adjoint && a.contains(g * h);
      c.expect(colon.contains(g) == adjoint, "colon sampling");
    }
    Ideal meet = ideal_intersect(a, j);
    for (const auto& g : meet.basis())
      c.expect(a.contains(g) && j.contains(g), "intersection basis containment");
    for (int s = 0; s < 4; ++s) {
      Polynomial g = testing::random_poly(grev, rng, 3, 3, 3);
      if (s < 2) g = g * a.generators()[0] * j.generators()[0];
      c.expect(meet.contains(g) == (a.contains(g) && j.contains(g)), "intersection sampling");
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace frobkit

int main() {
  using namespace frobkit;
  const std::vector<Criterion> criteria{
      {1, "Fedder hypersurface suite (node, cusp, pinch point)", 1.0, fedder_suite},
      {2, "Elliptic cone x^3+y^3+z^3 against multinomial oracle", 2.0, elliptic_cone},
      {3, "fpt bracket for x^3-y^2 at p=7", 5.0, fpt_bracket},
      {4, "Principal tau grid and jumping numbers for x^3-y^2 at p=7", 30.0, tau_grid},
      {5, "Monomial tau floor-formula oracle", 0.0, monomial_tau},
      {6, "Root/bracket adjunction, exactness, tower law (500 instances)", 10.0, root_bracket},
      {7, "Composition algebra and self-composition exponents", 0.0, composition},
      {8, "Gauge contraction (200 instances) and sigma certification", 0.0, gauge_contraction},
      {9, "Lattice closure of the standard splitting", 0.0, lattice},
      {10, "Groebner grevlex/lex, colon and intersection oracles (100 ideals)", 60.0,
       groebner_oracle},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (crit.limit_s > 0 && secs > crit.limit_s) {
      std::ostringstream msg;
      msg << "time " << secs << " s exceeds " << crit.limit_s << " s";
      check.expect(false, msg.str());
    }
    const bool ok = check.failures == 0;
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %-66s %8.3f s\n", ok ? "PASS" : "FAIL", crit.id, crit.title, secs);
    if (!ok) std::fputs(check.log.str().c_str(), stdout);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
