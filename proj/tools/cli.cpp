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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <new>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobkit/cartier.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/groebner.hpp"
#include "frobkit/purity.hpp"
#include "frobkit/thresholds.hpp"

namespace frobkit::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum Flag : unsigned {
  kE = 1u << 0,
  kEInner = 1u << 1,
  kEmax = 1u << 2,
  kT = 1u << 3,
  kAt = 1u << 4,
  kBudget = 1u << 5,
  kDenom = 1u << 6,
  kLatticeCap = 1u << 7,
  kStart = 1u << 8,
};

struct Options {
  std::uint64_t p = 0;
  std::string vars;
  std::string order = "grevlex";
  std::uint64_t e = 1;
  std::optional<std::uint64_t> e_inner;
  std::uint64_t emax = 1;
  std::string t;
  std::optional<std::string> at;
  std::size_t budget = kDefaultIterationBudget;
  std::optional<std::size_t> pairs_cap;
  std::uint64_t denom = 12;
  std::size_t cap = 256;
  std::optional<std::string> start;
  bool json = false;
  std::vector<std::string> args;
};

// Everything a handler needs once flags are parsed.
struct Context {
  const Options& opt;
  Ring ring;
  GbOptions gb;

  Polynomial poly(std::size_t i) const { return parse_poly(opt.args.at(i), ring); }
  Ideal ideal(const std::string& s) const { return parse_ideal(s, ring); }
  Ideal ideal(std::size_t i) const { return ideal(opt.args.at(i)); }
  std::optional<Ideal> at() const {
    if (!opt.at) return std::nullopt;
    return ideal(*opt.at);
  }
  std::string where() const { return opt.at ? "at " + ideal(*opt.at).to_string() : "at origin"; }
  Rational t() const {
    if (opt.t.empty()) throw UsageError("--t is required");
    return Rational::parse(opt.t);
  }
};

struct Output {
  std::string text;
  Json payload = Json::object();
};

using Handler = std::function<Output(const Context&)>;

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> positionals;
  bool variadic = false;
  unsigned flags = 0;
  Handler run;
};

Json ideal_json(const Ideal& i, const GbOptions& gb) {
  Json arr = Json::array();
  for (const auto& g : i.basis(gb)) arr.push_back(g.to_string());
  return arr;
}

std::string ideal_text(const Ideal& i, const GbOptions& gb) {
  i.basis(gb);
  return i.to_string();
}

Output ideal_result(const std::string& label, const Ideal& i, const GbOptions& gb) {
  Output o;
  o.text = label + " = " + ideal_text(i, gb);
  o.payload[label] = ideal_json(i, gb);
  return o;
}

Output verdict(const std::string& key, bool value, const std::string& yes, const std::string& no,
               const std::string& suffix = "") {
  Output o;
  o.text = (value ? yes : no) + suffix;
  o.payload[key] = value;
  return o;
}

std::vector<Polynomial> poly_list(const std::string& src, const Ring& ring) {
  std::vector<Polynomial> out;
  std::size_t from = 0;
  for (;;) {
    std::size_t cut = src.find_first_of(";,", from);
    std::string piece = src.substr(from, cut == std::string::npos ? std::string::npos : cut - from);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), from);
    }
    if (cut == std::string::npos) break;
    from = cut + 1;
  }
  return out;
}

std::string fedder_text(bool pure, const Context& c) {
  return std::string(pure ? "F-PURE " : "NOT F-PURE ") + c.where() + " (e=" +
         std::to_string(c.opt.e) + ")";
}

Output fedder_output(bool pure, const Context& c) {
  Output o;
  o.text = fedder_text(pure, c);
  o.payload["fpure"] = pure;
  o.payload["e"] = c.opt.e;
  if (c.opt.at) o.payload["at"] = ideal_json(c.ideal(*c.opt.at), c.gb);
  return o;
}

std::vector<Command> commands() {
  std::vector<Command> cmds;
  cmds.push_back({"gb", "reduced Groebner basis", {"ideal"}, false, 0, [](const Context& c) {
                    return ideal_result("basis", c.ideal(0), c.gb);
                  }});
  cmds.push_back({"nf", "normal form of f modulo an ideal", {"f", "ideal"}, false, 0,
                  [](const Context& c) {
                    Output o;
                    Polynomial r = normal_form(c.poly(0), c.ideal(1), c.gb);
                    o.text = "nf = " + r.to_string();
                    o.payload["nf"] = r.to_string();
                    return o;
                  }});
  cmds.push_back({"colon", "ideal quotient I : J", {"I", "J"}, false, 0, [](const Context& c) {
                    return ideal_result("colon", ideal_colon(c.ideal(0), c.ideal(1), c.gb), c.gb);
                  }});
  cmds.push_back({"intersect", "intersection of two ideals", {"I", "J"}, false, 0,
                  [](const Context& c) {
                    return ideal_result("intersection",
                                        ideal_intersect(c.ideal(0), c.ideal(1), c.gb), c.gb);
                  }});
  cmds.push_back({"bracket", "Frobenius bracket power I^[p^e]", {"ideal"}, false, kE,
                  [](const Context& c) {
                    return ideal_result("bracket", bracket_power(c.ideal(0), c.opt.e), c.gb);
                  }});
  cmds.push_back({"root", "p^e-th root ideal", {"ideal"}, false, kE, [](const Context& c) {
                    return ideal_result("root", pe_root(c.ideal(0), c.opt.e), c.gb);
                  }});
  cmds.push_back({"apply", "apply the Cartier map (u, e) to an ideal", {"u", "ideal"}, false, kE,
                  [](const Context& c) {
                    CartierOp op(c.poly(0), c.opt.e);
                    return ideal_result("image", cartier_apply(op, c.ideal(1)), c.gb);
                  }});
  cmds.push_back({"compose", "compose (u_outer, e) after (u_inner, e-inner)",
                  {"u_outer", "u_inner"}, false, kE | kEInner, [](const Context& c) {
                    CartierOp outer(c.poly(0), c.opt.e);
                    CartierOp inner(c.poly(1), c.opt.e_inner.value_or(c.opt.e));
                    CartierOp comp = cartier_compose(outer, inner);
                    Output o;
                    o.text = "premultiplier = " + comp.premultiplier().to_string() +
                             "\nlevel = " + std::to_string(comp.level());
                    o.payload["premultiplier"] = comp.premultiplier().to_string();
                    o.payload["level"] = comp.level();
                    return o;
                  }});
  cmds.push_back({"fedder", "Fedder test for a hypersurface", {"f"}, false, kE | kAt,
                  [](const Context& c) {
                    return fedder_output(fedder_hypersurface(c.poly(0), c.opt.e, c.at(), c.gb), c);
                  }});
  cmds.push_back({"fedder-ci", "Fedder test for a complete intersection", {"sequence"}, false,
                  kE | kAt, [](const Context& c) {
                    auto seq = poly_list(c.opt.args.at(0), c.ring);
                    return fedder_output(fedder_ci(seq, c.opt.e, c.at(), c.gb), c);
                  }});
  cmds.push_back({"fedder-ideal", "Fedder test for an arbitrary ideal", {"ideal"}, false,
                  kE | kAt, [](const Context& c) {
                    return fedder_output(fedder_ideal(c.ideal(0), c.opt.e, c.at(), c.gb), c);
                  }});
  cmds.push_back({"split", "whether (u, e) is a Frobenius splitting", {"u"}, false, kE,
                  [](const Context& c) {
                    return verdict("splitting", is_splitting(CartierOp(c.poly(0), c.opt.e)),
                                   "SPLITTING", "NOT SPLITTING");
                  }});
  cmds.push_back({"compat", "whether an ideal is compatible with (u, e)", {"u", "ideal"}, false,
                  kE, [](const Context& c) {
                    CartierOp op(c.poly(0), c.opt.e);
                    return verdict("compatible", is_compatible(op, c.ideal(1), c.gb),
                                   "COMPATIBLE", "NOT COMPATIBLE");
                  }});
  cmds.push_back({"lattice", "closure of compatible seeds under sum, intersection, colon",
                  {"u", "seeds"}, true, kE | kLatticeCap, [](const Context& c) {
                    CartierOp op(c.poly(0), c.opt.e);
                    std::vector<Ideal> seeds;
                    for (std::size_t i = 1; i < c.opt.args.size(); ++i) seeds.push_back(c.ideal(i));
                    LatticeResult res = lattice_closure(op, seeds, c.opt.cap, c.gb);
                    Output o;
                    Json arr = Json::array();
                    std::ostringstream text;
                    for (const auto& m : res.ideals) {
                      arr.push_back(ideal_json(m, c.gb));
                      text << ideal_text(m, c.gb) << "\n";
                    }
                    if (res.truncated) text << "(truncated at " << c.opt.cap << ")\n";
                    o.text = text.str();
                    if (!o.text.empty()) o.text.pop_back();
                    o.payload["ideals"] = std::move(arr);
                    o.payload["truncated"] = res.truncated;
                    return o;
                  }});
  cmds.push_back({"sigma", "stable image of (u, e)", {"u"}, false, kE | kBudget | kStart,
                  [](const Context& c) {
                    CartierOp op(c.poly(0), c.opt.e);
                    std::optional<Ideal> start;
                    if (c.opt.start) start = c.ideal(*c.opt.start);
                    StabilizationReport rep = sigma(op, start, c.opt.budget, c.gb);
                    Output o;
                    o.text = "sigma = " + ideal_text(rep.stable, c.gb) +
                             "\nsteps = " + std::to_string(rep.steps) +
                             "\ncertified = " + (rep.certified ? "true" : "false") +
                             "\ngauge bound = " + std::to_string(rep.gauge_bound);
                    o.payload["sigma"] = ideal_json(rep.stable, c.gb);
                    o.payload["steps"] = rep.steps;
                    o.payload["certified"] = rep.certified;
                    o.payload["gauge_bound"] = rep.gauge_bound;
                    return o;
                  }});
  cmds.push_back({"nilpotent", "whether (u, e) is nilpotent on J modulo I", {"u", "J", "I"},
                  false, kE | kBudget, [](const Context& c) {
                    CartierOp op(c.poly(0), c.opt.e);
                    bool nil = is_nilpotent_mod(op, c.ideal(1), c.ideal(2), c.opt.budget, c.gb);
                    return verdict("nilpotent", nil, "NILPOTENT", "NOT NILPOTENT");
                  }});
  cmds.push_back({"gauge", "box-degree gauge of a polynomial", {"f"}, false, 0,
                  [](const Context& c) {
                    GaugeValue g = gauge_of(c.poly(0));
                    Output o;
                    o.text = "gauge = " + g.to_string();
                    if (g.is_minus_infinity())
                      o.payload["gauge"] = "-inf";
                    else
                      o.payload["gauge"] = g.value();
                    return o;
                  }});
  cmds.push_back({"gaugebound", "gauge constant K of (u, e)", {"u"}, false, kE,
                  [](const Context& c) {
                    std::uint64_t k = gauge_bound(CartierOp(c.poly(0), c.opt.e));
                    Output o;
                    o.text = "K = " + std::to_string(k);
                    o.payload["K"] = k;
                    return o;
                  }});
  cmds.push_back({"nu", "nu(p^e) of f", {"f"}, false, kE | kAt, [](const Context& c) {
                    std::uint64_t v = nu(c.poly(0), c.opt.e, c.at(), c.gb);
                    Output o;
                    o.text = "nu = " + std::to_string(v) + " (e=" + std::to_string(c.opt.e) + ")";
                    o.payload["e"] = c.opt.e;
                    o.payload["nu"] = v;
                    return o;
                  }});
  cmds.push_back({"fpt", "F-pure threshold bracket from nu(p^e), e <= emax", {"f"}, false,
                  kEmax | kAt, [](const Context& c) {
                    FptResult res = fpt_bounds(c.poly(0), c.opt.emax, c.at(), c.gb);
                    Output o;
                    std::ostringstream text;
                    Json nus = Json::array();
                    for (const auto& [e, v] : res.nus) {
                      text << "nu(" << res.prime << "^" << e << ") = " << v << "\n";
                      nus.push_back(Json::array({e, v}));
                    }
                    text << "fpt in (" << res.lower.to_string() << ", " << res.upper.to_string()
                         << "]";
                    o.text = text.str();
                    o.payload["nus"] = std::move(nus);
                    o.payload["lower"] = res.lower.to_string();
                    o.payload["upper"] = res.upper.to_string();
                    return o;
                  }});
  cmds.push_back({"fpure-pair", "sharp F-purity of the pair (f, t) at level e", {"f"}, false,
                  kE | kT | kAt, [](const Context& c) {
                    Rational t = c.t();
                    bool pure = fpure_pair(c.poly(0), t, c.opt.e, c.at(), c.gb);
                    Output o = verdict("fpure", pure, "SHARPLY F-PURE ", "NOT SHARPLY F-PURE ",
                                       c.where() + " (t=" + t.to_string() +
                                           ", e=" + std::to_string(c.opt.e) + ")");
                    o.payload["t"] = t.to_string();
                    o.payload["e"] = c.opt.e;
                    return o;
                  }});
  cmds.push_back({"tau", "test ideal tau(f^t)", {"f"}, false, kE | kT | kBudget,
                  [](const Context& c) {
                    Rational t = c.t();
                    Output o = ideal_result(
                        "tau", tau_principal(c.poly(0), t, c.opt.e, c.opt.budget, c.gb), c.gb);
                    o.payload["t"] = t.to_string();
                    return o;
                  }});
  cmds.push_back({"jumps", "F-jumping numbers on the grid k/denom in (0, t]", {"f"}, false,
                  kT | kDenom | kBudget, [](const Context& c) {
                    Rational t = c.t();
                    auto jumps = jumping_numbers(c.poly(0), t, c.opt.denom, 1, c.opt.budget, c.gb);
                    Output o;
                    Json arr = Json::array();
                    std::string list;
                    for (const auto& j : jumps) {
                      arr.push_back(j.to_string());
                      list += (list.empty() ? "" : ", ") + j.to_string();
                    }
                    o.text = "jumps = {" + list + "}";
                    o.payload["t_max"] = t.to_string();
                    o.payload["denom"] = c.opt.denom;
                    o.payload["jumps"] = std::move(arr);
                    return o;
                  }});
  return cmds;
}

std::vector<std::string> split_vars(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::size_t resolve_pairs_cap(const Options& opt) {
  if (opt.pairs_cap) return *opt.pairs_cap;
  if (const char* env = std::getenv("FROBKIT_PAIRS_CAP")) {
    std::string_view s(env);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw UsageError("FROBKIT_PAIRS_CAP must be a positive integer");
    return v;
  }
  return default_pair_cap();
}

Ring build_ring(const Options& opt) {
  try {
    return make_ring(split_vars(opt.vars), opt.p, parse_order(opt.order));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Frobenius invariants of polynomial rings over F_p", "frobkit"};
  app.require_subcommand(1, 1);
  const auto cmds = commands();
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& cmd : cmds) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--char", opt.p, "characteristic p")->required();
    sub->add_option("--vars", opt.vars, "comma-separated variable names")->required();
    sub->add_option("--order", opt.order, "grevlex, lex or grlex")->capture_default_str();
    sub->add_option("--pairs-cap", opt.pairs_cap, "S-pair reduction cap")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", opt.json, "machine-readable output");
    if (cmd.flags & kE)
      sub->add_option("--e", opt.e, cmd.name == "tau" ? "first chain level compared" : "Frobenius level")
          ->check(CLI::PositiveNumber);
    if (cmd.flags & kEInner)
      sub->add_option("--e-inner", opt.e_inner, "level of the inner map (default --e)")
          ->check(CLI::PositiveNumber);
    if (cmd.flags & kEmax)
      sub->add_option("--emax", opt.emax, "largest level")->check(CLI::PositiveNumber);
    if (cmd.flags & kT) sub->add_option("--t", opt.t, "exponent t as n or n/d")->required();
    if (cmd.flags & kAt) sub->add_option("--at", opt.at, "ideal of the point (default origin)");
    if (cmd.flags & kBudget)
      sub->add_option("--budget", opt.budget, "iteration budget")->capture_default_str();
    if (cmd.flags & kDenom)
      sub->add_option("--denom", opt.denom, "grid denominator")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    if (cmd.flags & kLatticeCap)
      sub->add_option("--cap", opt.cap, "maximum lattice size")->capture_default_str();
    if (cmd.flags & kStart) sub->add_option("--start", opt.start, "starting ideal (default <1>)");
    std::string names;
    for (const auto& p : cmd.positionals) names += (names.empty() ? "" : " ") + p;
    auto* pos = sub->add_option("args", opt.args, names)->required();
    if (cmd.variadic)
      pos->expected(static_cast<int>(cmd.positionals.size()) - 1, CLI::detail::expected_max_vector_size);
    else
      pos->expected(static_cast<int>(cmd.positionals.size()));
    subs.emplace_back(sub, &cmd);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  const Command* cmd = nullptr;
  for (const auto& [sub, c] : subs) {
    if (sub->parsed()) cmd = c;
  }
  if (!cmd) {
    err << "error: no command given\n";
    return kUsage;
  }

  try {
    const std::size_t need = cmd->positionals.size() - (cmd->variadic ? 1 : 0);
    if (opt.args.size() < need || (!cmd->variadic && opt.args.size() != need))
      throw UsageError(cmd->name + ": expected " + std::to_string(need) + " argument(s)");
    Ring ring = build_ring(opt);
    GbOptions gb;
    gb.pair_cap = resolve_pairs_cap(opt);
    Context ctx{opt, ring, gb};
    Output res = cmd->run(ctx);
    if (opt.json) {
      Json doc;
      doc["command"] = cmd->name;
      doc["ring"] = {{"char", opt.p}, {"vars", ring->vars()}, {"order", to_string(ring->order().kind)}};
      for (auto& [k, v] : res.payload.items()) doc[k] = v;
      out << doc.dump() << "\n";
    } else {
      out << res.text << "\n";
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kCap;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kCap;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kDomain;
  }
}

}  // namespace frobkit::cli
