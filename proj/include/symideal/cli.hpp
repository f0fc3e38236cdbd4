#pragma once

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "symideal/io.hpp"

namespace symideal::cli {

using io::json;

enum Exit : int { ok = 0, negative = 1, usage = 2, cap = 3 };

namespace detail {

struct Settings {
  std::string format = "text";
  bool timing = false;
  std::uint32_t max_degree = 40;
  std::size_t max_pairs = 200000;
  Index max_level = 8;
  std::uint64_t seed = 1;

  bool json() const { return format == "json"; }
  GbLimits limits() const { return {max_degree, max_pairs}; }
  void level(Index n, const char* what) const {
    if (n > max_level)
      throw CapExceeded("max-level", std::string(what) + " = " + std::to_string(n) + " > " +
                                         std::to_string(max_level));
  }
};

inline std::vector<Polynomial> gather(const std::vector<std::string>& inline_texts,
                                      const std::string& file) {
  std::vector<Polynomial> out;
  std::size_t i = 0;
  for (const auto& s : inline_texts) out.push_back(parse_polynomial(s, ++i));
  if (!file.empty()) {
    auto more = io::read_polynomial_file(file);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

inline std::vector<Monomial> monomials(const std::vector<Polynomial>& ps) {
  std::vector<Monomial> out;
  for (const auto& p : ps) {
    if (p.size() != 1 || p.terms().begin()->second != 1)
      throw ParseError("expected a monomial, got '" + to_string(p) + "'", 1, 1);
    out.push_back(p.terms().begin()->first);
  }
  return out;
}

inline std::vector<Variable> variables_of(std::span<const Polynomial> ps) {
  std::set<Variable> vs;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms())
      for (const auto& f : m.factors()) vs.insert(f.var);
  return {vs.begin(), vs.end()};
}

inline std::size_t arity_of(std::span<const Polynomial> ps) {
  std::size_t k = 0;
  for (const auto& p : ps) k = common_arity(k, p.x_arity());
  return k == 0 ? 1 : k;
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

/// Text: a '#' header then one polynomial per line, so the output re-parses
/// as an input file.
inline void emit_list(std::ostream& out, const Settings& s, const std::string& command,
                      const std::string& header, std::span<const Polynomial> ps,
                      const TermOrder& order, json extra = json::object()) {
  if (s.json()) {
    extra["schema"] = io::schema;
    extra["command"] = command;
    extra["order"] = order.describe();
    extra["count"] = ps.size();
    extra["polynomials"] = io::poly_list(ps, order);
    out << extra.dump(2) << '\n';
    return;
  }
  out << "# " << header << ": " << ps.size() << " polynomial" << (ps.size() == 1 ? "" : "s")
      << '\n';
  for (const auto& p : ps) out << to_string(p, order) << '\n';
}

inline void emit_json(std::ostream& out, const std::string& command, json body) {
  body["schema"] = io::schema;
  body["command"] = command;
  out << body.dump(2) << '\n';
}

} // namespace detail

/// Runs one command line (without the program name). Exit status: 0 success,
/// 1 mathematical negative, 2 usage or parse error, 3 cap exceeded.
inline int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Settings;
  using detail::yes;
  Settings s;
  std::function<int()> action;

  CLI::App app{"Symmetric ideals in infinitely many indexed variables", "symideal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", s.timing, "Include wall-clock timings in reports");
  app.add_option("--max-degree", s.max_degree, "Degree cap for Groebner completion")
      ->capture_default_str();
  app.add_option("--max-pairs", s.max_pairs, "Critical pair cap for Groebner completion")
      ->capture_default_str();
  app.add_option("--max-level", s.max_level, "Cap on the ring levels n, m")
      ->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for sampled modes")->capture_default_str();

  // Shared argument holders.
  std::vector<std::string> texts, basis_texts, gens_texts, other_texts, drop_texts, bind_texts,
      check_texts;
  std::string file, basis_file, gens_file, order_text, relation = "higman", mode = "exhaustive",
                                                       f_text, chain_file;
  Index n = 0, m = 0, lo = 0, hi = 0, from = 3, to = 0;
  std::size_t k = 1, samples = 32;
  bool tail = false, drop_aux = false, scan = false;
  std::optional<Index> n_opt;

  auto positional = [&](CLI::App* c, const char* what) {
    c->add_option("polynomials", texts, what);
    c->add_option("--file", file, "File with one polynomial per line")
        ->check(CLI::ExistingFile);
  };
  auto basis_opts = [&](CLI::App* c) {
    c->add_option("--basis", basis_texts, "Basis element (repeatable)");
    c->add_option("--basis-file", basis_file, "File of basis elements")->check(CLI::ExistingFile);
  };
  auto gens_opts = [&](CLI::App* c) {
    c->add_option("--gens", gens_texts, "Ideal generator (repeatable)");
    c->add_option("--gens-file", gens_file, "File of ideal generators")->check(CLI::ExistingFile);
  };
  auto order_of = [&](const char* fallback) {
    return io::parse_order(order_text.empty() ? fallback : order_text);
  };
  auto two_monomials = [&]() {
    auto ms = detail::monomials(detail::gather(texts, file));
    if (ms.size() != 2) throw UsageError("expected exactly two monomials v w");
    return ms;
  };

  // order cmp | witness
  auto* order = app.add_subcommand("order", "Term orders and the cancellation ordering");
  order->require_subcommand(1);
  auto* cmp = order->add_subcommand("cmp", "Compare two monomials under a term order");
  positional(cmp, "Monomials v w");
  cmp->add_option("--order", order_text, "lex | grevlex | plex:(cycles)");
  cmp->callback([&] {
    action = [&] {
      auto ms = two_monomials();
      auto ord = order_of("lex");
      auto c = ord.compare(ms[0], ms[1]);
      std::string r = c < 0 ? "less" : c > 0 ? "greater" : "equal";
      if (s.json())
        detail::emit_json(out, "order cmp", {{"order", ord.describe()}, {"result", r}});
      else
        out << r << '\n';
      return ok;
    };
  });
  auto* witness = order->add_subcommand("witness", "Certify v below w with a permutation");
  positional(witness, "Monomials v w");
  witness->callback([&] {
    action = [&] {
      auto ms = two_monomials();
      auto r = cancellation_witness(ms[0], ms[1]);
      bool verified =
          r.related && product(*r.cofactor, act(*r.sigma, ms[0])) == ms[1];
      if (s.json()) {
        auto j = io::to_json(r);
        if (r.related) j["verified"] = verified;
        detail::emit_json(out, "order witness", j);
      } else {
        out << "related: " << yes(r.related) << '\n';
        if (r.related) {
          out << "phi: " << io::phi_to_string(*r.phi) << '\n'
              << "sigma: " << r.sigma->to_cycles() << '\n'
              << "cofactor: " << to_string(*r.cofactor) << '\n'
              << "verified: " << yes(verified) << '\n';
        }
      }
      return r.related ? ok : negative;
    };
  });

  // divides-upto-injection
  auto* inj = app.add_subcommand("divides-upto-injection",
                                 "Find an injection pi with pi(v) dividing w");
  positional(inj, "Monomials v w");
  inj->callback([&] {
    action = [&] {
      auto ms = two_monomials();
      auto pi = injection_divisor(ms[0], ms[1]);
      if (s.json()) {
        json j{{"related", pi.has_value()}};
        if (pi) {
          j["injection"] = pi->to_string();
          j["image"] = to_string(act(*pi, ms[0]));
        }
        detail::emit_json(out, "divides-upto-injection", j);
      } else if (pi) {
        out << "injection: " << pi->to_string() << '\n'
            << "image: " << to_string(act(*pi, ms[0])) << '\n';
      } else {
        out << "injection: none\n";
      }
      return pi ? ok : negative;
    };
  });

  // wqo scan
  auto* wqo = app.add_subcommand("wqo", "Good and bad sequences");
  wqo->require_subcommand(1);
  auto* wscan = wqo->add_subcommand("scan", "First pair i < j with s_i related to s_j");
  positional(wscan, "Monomials of the sequence");
  wscan->add_option("--relation", relation, "higman | injection")
      ->check(CLI::IsMember({"higman", "injection"}));
  wscan->callback([&] {
    action = [&] {
      auto ms = detail::monomials(detail::gather(texts, file));
      auto rel = relation == "higman" ? Relation::higman : Relation::injection;
      auto p = goodness_scan(ms, rel);
      if (s.json()) {
        json j{{"relation", relation}, {"length", ms.size()}};
        j["pair"] = p ? json{p->first, p->second} : json(nullptr);
        detail::emit_json(out, "wqo scan", j);
      } else if (p) {
        out << "good pair: (" << p->first << ", " << p->second << ")\n";
      } else {
        out << "good pair: none\n";
      }
      return p ? ok : negative;
    };
  });

  // badseq
  auto* bad = app.add_subcommand("badseq", "The arity-2 bad sequence s_n");
  bad->add_option("--n", n_opt, "Single element s_n");
  bad->add_option("--from", from, "First index")->capture_default_str();
  bad->add_option("--to", to, "Last index");
  bad->add_flag("--scan", scan, "Check all pairs for divisibility up to injections");
  bad->callback([&] {
    action = [&] {
      Index a = n_opt ? *n_opt : from;
      Index b = n_opt ? *n_opt : (to ? to : from);
      if (b < a) throw UsageError("--to must be at least --from");
      std::vector<Monomial> seq;
      for (Index i = a; i <= b; ++i) seq.push_back(bad_sequence_element(i));
      std::size_t pairs = 0, related_pairs = 0;
      if (scan)
        for (std::size_t i = 0; i < seq.size(); ++i)
          for (std::size_t j = i + 1; j < seq.size(); ++j) {
            ++pairs;
            if (injection_divisor(seq[i], seq[j])) ++related_pairs;
          }
      if (s.json()) {
        json elems = json::array();
        for (std::size_t i = 0; i < seq.size(); ++i)
          elems.push_back({{"n", a + i}, {"monomial", to_string(seq[i])}});
        json j{{"elements", elems}};
        if (scan) j["scan"] = {{"pairs", pairs}, {"related", related_pairs}};
        detail::emit_json(out, "badseq", j);
      } else {
        for (std::size_t i = 0; i < seq.size(); ++i)
          out << "s_" << a + i << " = " << to_string(seq[i]) << '\n';
        if (scan) out << "pairs checked: " << pairs << ", related: " << related_pairs << '\n';
      }
      return related_pairs == 0 ? ok : negative;
    };
  });

  // reduce / normal-form
  auto* red = app.add_subcommand("reduce", "One equivariant reduction step of f by B");
  positional(red, "Polynomial f");
  basis_opts(red);
  red->callback([&] {
    action = [&] {
      auto fs = detail::gather(texts, file);
      if (fs.size() != 1) throw UsageError("expected exactly one polynomial f");
      auto basis = detail::gather(basis_texts, basis_file);
      auto r = reduce_step(fs[0], basis);
      if (s.json()) {
        json j{{"reducible", r.has_value()}};
        if (r) {
          j["step"] = io::to_json(r->step);
          j["result"] = to_string(r->h);
        }
        detail::emit_json(out, "reduce", j);
      } else if (r) {
        out << "step: generator " << r->step.generator_index + 1 << ", sigma "
            << r->step.sigma.to_cycles() << ", term "
            << term_to_string(r->step.coefficient, r->step.cofactor) << '\n'
            << "result: " << to_string(r->h) << '\n';
      } else {
        out << "irreducible\n";
      }
      return r ? ok : negative;
    };
  });
  auto* nf = app.add_subcommand("normal-form", "Normal form of f by B with its trace");
  positional(nf, "Polynomial f");
  basis_opts(nf);
  nf->add_flag("--tail", tail, "Also reduce non-leading terms");
  nf->callback([&] {
    action = [&] {
      auto fs = detail::gather(texts, file);
      if (fs.size() != 1) throw UsageError("expected exactly one polynomial f");
      auto basis = detail::gather(basis_texts, basis_file);
      auto t = normal_form(fs[0], basis, tail);
      bool verified = verify_trace(fs[0], t);
      if (s.json()) {
        auto j = io::to_json(t);
        j["verified"] = verified;
        detail::emit_json(out, "normal-form", j);
      } else {
        out << "steps: " << t.steps.size() << '\n';
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          const auto& st = t.steps[i];
          out << "  " << i + 1 << ": generator " << st.generator_index + 1 << ", sigma "
              << st.sigma.to_cycles() << ", term " << term_to_string(st.coefficient, st.cofactor)
              << '\n';
        }
        out << "residue: " << to_string(t.residue) << '\n'
            << "verified: " << yes(verified) << '\n';
      }
      return ok;
    };
  });

  // gb ...
  auto* gb = app.add_subcommand("gb", "Classical Groebner bases over finitely many variables");
  gb->require_subcommand(1);
  auto* gtc = gb->add_subcommand("truncate-check", "Equivariant Groebner test on R_n");
  basis_opts(gtc);
  gens_opts(gtc);
  gtc->add_option("--n", n, "Level n")->required();
  gtc->callback([&] {
    action = [&] {
      s.level(n, "n");
      auto basis = detail::gather(basis_texts, basis_file);
      auto gens = detail::gather(gens_texts, gens_file);
      auto r = truncation_gb_check(basis, gens, n, s.limits());
      if (s.json()) {
        json j{{"n", n},
               {"holds", r.holds},
               {"basis_in_ideal", r.basis_in_ideal},
               {"generators_reduce", r.generators_reduce},
               {"classical_gb_reduces", r.classical_gb_reduces}};
        j["offender"] = r.offender ? json(to_string(*r.offender)) : json(nullptr);
        detail::emit_json(out, "gb truncate-check", j);
      } else {
        out << "holds: " << yes(r.holds) << '\n'
            << "basis in ideal: " << yes(r.basis_in_ideal) << '\n'
            << "symmetrized generators reduce to 0: " << yes(r.generators_reduce) << '\n'
            << "classical basis reduces to 0: " << yes(r.classical_gb_reduces) << '\n';
        if (r.offender) out << "offender: " << to_string(*r.offender) << '\n';
      }
      return r.holds ? ok : negative;
    };
  });
  auto ideal_of = [&](std::vector<Polynomial> gens, const char* fallback) {
    auto ord = order_of(fallback);
    auto universe = detail::variables_of(gens);
    if (n) {
      s.level(n, "n");
      auto lv = level_universe(n, k);
      universe.insert(universe.end(), lv.begin(), lv.end());
    }
    return FiniteIdeal(std::move(gens), std::move(universe), ord, s.limits());
  };
  auto universe_opts = [&](CLI::App* c) {
    c->add_option("--order", order_text, "lex | grevlex | plex:(cycles)");
    c->add_option("--n", n, "Add every variable of R_n to the universe");
    c->add_option("--k", k, "Arity for --n")->capture_default_str();
  };
  auto* gbb = gb->add_subcommand("buchberger", "Reduced Groebner basis");
  positional(gbb, "Generators");
  universe_opts(gbb);
  gbb->callback([&] {
    action = [&] {
      auto I = ideal_of(detail::gather(texts, file), "grevlex");
      detail::emit_list(out, s, "gb buchberger", "reduced Groebner basis (" +
                                                     I.order().describe() + ")",
                        I.groebner(), I.order());
      return ok;
    };
  });
  auto* gbm = gb->add_subcommand("membership", "Is f in the ideal?");
  positional(gbm, "Polynomial f");
  gens_opts(gbm);
  universe_opts(gbm);
  gbm->callback([&] {
    action = [&] {
      auto fs = detail::gather(texts, file);
      if (fs.size() != 1) throw UsageError("expected exactly one polynomial f");
      auto gens = detail::gather(gens_texts, gens_file);
      auto all = gens;
      all.push_back(fs[0]);
      auto universe = detail::variables_of(all);
      if (n) {
        s.level(n, "n");
        auto lv = level_universe(n, k);
        universe.insert(universe.end(), lv.begin(), lv.end());
      }
      FiniteIdeal I(gens, universe, order_of("grevlex"), s.limits());
      auto r = classical_normal_form(fs[0], I);
      if (s.json())
        detail::emit_json(out, "gb membership",
                          {{"member", r.is_zero()}, {"remainder", to_string(r, I.order())}});
      else
        out << "member: " << yes(r.is_zero()) << '\n'
            << "remainder: " << to_string(r, I.order()) << '\n';
      return r.is_zero() ? ok : negative;
    };
  });
  auto* gbe = gb->add_subcommand("equal", "Do two generator sets give the same ideal?");
  gens_opts(gbe);
  gbe->add_option("--other", other_texts, "Generator of the second ideal (repeatable)");
  gbe->add_option("--other-file", file, "File of the second ideal's generators")
      ->check(CLI::ExistingFile);
  universe_opts(gbe);
  gbe->callback([&] {
    action = [&] {
      auto a = detail::gather(gens_texts, gens_file);
      auto b = detail::gather(other_texts, file);
      auto all = a;
      all.insert(all.end(), b.begin(), b.end());
      auto universe = detail::variables_of(all);
      if (n) {
        s.level(n, "n");
        auto lv = level_universe(n, k);
        universe.insert(universe.end(), lv.begin(), lv.end());
      }
      auto ord = order_of("grevlex");
      FiniteIdeal I(a, universe, ord, s.limits()), J(b, universe, ord, s.limits());
      bool eq = ideal_equal(I, J);
      if (s.json())
        detail::emit_json(out, "gb equal", {{"equal", eq}});
      else
        out << "equal: " << yes(eq) << '\n';
      return eq ? ok : negative;
    };
  });
  auto* gbel = gb->add_subcommand("eliminate", "Intersect with the subring without --drop");
  positional(gbel, "Generators");
  universe_opts(gbel);
  gbel->add_option("--drop", drop_texts, "Variable to eliminate (repeatable)");
  gbel->add_flag("--drop-aux", drop_aux, "Eliminate every t[i]");
  gbel->callback([&] {
    action = [&] {
      auto I = ideal_of(detail::gather(texts, file), "grevlex");
      std::set<Variable> drop;
      for (const auto& d : drop_texts) {
        auto mono = parse_monomial(d);
        if (mono.factors().size() != 1 || mono.factors()[0].exp != 1)
          throw UsageError("--drop expects a single variable, got '" + d + "'");
        drop.insert(mono.factors()[0].var);
      }
      if (drop_aux)
        for (const auto& v : I.universe())
          if (!v.is_x()) drop.insert(v);
      auto J = eliminate(I, drop);
      detail::emit_list(out, s, "gb eliminate", "eliminated ideal (" + J.order().describe() + ")",
                        J.groebner(), J.order());
      return ok;
    };
  });
  auto* gbu = gb->add_subcommand("universal-check",
                                 "Does B contain a Groebner basis for every permuted lex order?");
  basis_opts(gbu);
  gbu->add_option("--n", n, "Level n")->required();
  gbu->add_option("--ideal", gens_texts, "Ideal generator (default: the orbit of B)");
  gbu->add_option("--ideal-file", gens_file, "File of ideal generators")->check(CLI::ExistingFile);
  gbu->add_option("--mode", mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  gbu->add_option("--samples", samples, "Orders to sample")->capture_default_str();
  gbu->callback([&] {
    action = [&] {
      s.level(n, "n");
      auto basis = detail::gather(basis_texts, basis_file);
      auto ideal = detail::gather(gens_texts, gens_file);
      if (ideal.empty() && gens_texts.empty() && gens_file.empty())
        ideal = symmetrize(basis, n, n);
      UniversalCheckOptions opt;
      opt.mode = mode == "exhaustive" ? UniversalMode::exhaustive : UniversalMode::sampled;
      opt.samples = samples;
      opt.seed = s.seed;
      opt.limits = s.limits();
      auto r = universal_gb_check(basis, ideal, n, opt);
      if (s.json()) {
        json j{{"n", n},
               {"mode", mode},
               {"holds", r.holds},
               {"contained", r.contained},
               {"orders_checked", r.orders_checked}};
        j["counterexample"] = r.counterexample ? json(r.counterexample->to_cycles()) : json(nullptr);
        detail::emit_json(out, "gb universal-check", j);
      } else {
        out << "holds: " << yes(r.holds) << '\n'
            << "basis in ideal: " << yes(r.contained) << '\n'
            << "orders checked: " << r.orders_checked << '\n';
        if (r.counterexample) out << "counterexample: plex" << r.counterexample->to_cycles() << '\n';
      }
      return r.holds ? ok : negative;
    };
  });

  // symmetrize / project
  auto* sym = app.add_subcommand("symmetrize", "Generators of L_m(B)");
  positional(sym, "Generators B");
  sym->add_option("--m", m, "Target level m")->required();
  sym->add_option("--n", n_opt, "Source level n (default: largest index of B)");
  sym->add_option("--order", order_text, "Order for sign normalization and printing");
  sym->callback([&] {
    action = [&] {
      s.level(m, "m");
      auto b = detail::gather(texts, file);
      auto ord = order_of("lex");
      auto L = symmetrize(b, m, n_opt, ord);
      detail::emit_list(out, s, "symmetrize", "L_" + std::to_string(m), L, ord,
                        {{"m", m}});
      return ok;
    };
  });
  auto* proj = app.add_subcommand("project", "Generators of P_n(B) for B in R_m");
  positional(proj, "Generators B");
  proj->add_option("--m", m, "Source level m")->required();
  proj->add_option("--n", n, "Target level n")->required();
  proj->add_option("--order", order_text, "Term order");
  proj->callback([&] {
    action = [&] {
      s.level(m, "m");
      auto b = detail::gather(texts, file);
      auto ord = order_of("grevlex");
      auto P = project(b, m, n, ord, s.limits());
      detail::emit_list(out, s, "project", "P_" + std::to_string(n), P, ord,
                        {{"m", m}, {"n", n}});
      return ok;
    };
  });

  // chain check | stabilize
  auto* chain = app.add_subcommand("chain", "Invariant chains from a JSON chain document");
  chain->require_subcommand(1);
  auto* ccheck = chain->add_subcommand("check", "Symmetrization and projection invariance");
  ccheck->add_option("spec", chain_file, "Chain document")->required()->check(CLI::ExistingFile);
  ccheck->add_option("--lo", lo, "Window start (default: first level)");
  ccheck->add_option("--hi", hi, "Window end")->required();
  ccheck->callback([&] {
    action = [&] {
      s.level(hi, "hi");
      auto c = io::read_chain_file(chain_file);
      c.limits = s.limits();
      auto r = invariance_check(c, lo ? lo : c.first_level, hi);
      if (s.json())
        detail::emit_json(out, "chain check", io::to_json(r));
      else
        out << io::to_text(r);
      return r.holds ? ok : negative;
    };
  });
  auto* cstab = chain->add_subcommand("stabilize", "Window stabilization scan");
  cstab->add_option("spec", chain_file, "Chain document")->required()->check(CLI::ExistingFile);
  cstab->add_option("--hi", hi, "Window end")->required();
  cstab->callback([&] {
    action = [&] {
      s.level(hi, "hi");
      auto c = io::read_chain_file(chain_file);
      c.limits = s.limits();
      auto r = detect_stabilization(c, hi);
      if (s.json())
        detail::emit_json(out, "chain stabilize", io::to_json(r, s.timing));
      else
        out << io::to_text(r, s.timing);
      return r.N ? ok : negative;
    };
  });

  // toric ...
  auto* toric = app.add_subcommand("toric", "Kernels of x_u -> f(t_u1, ..., t_uk)");
  toric->require_subcommand(1);
  auto* tmat = toric->add_subcommand("matrix", "The 0/1 sorting matrix");
  tmat->add_option("--n", n, "Rows")->required();
  tmat->add_option("--k", k, "Column weight")->required();
  tmat->callback([&] {
    action = [&] {
      s.level(n, "n");
      auto a = sorting_matrix(n, k);
      if (s.json()) {
        json cols = json::array();
        for (const auto& c : a.columns) cols.push_back(compact_label(Variable::x(c)));
        detail::emit_json(out, "toric matrix",
                          {{"n", n}, {"k", k}, {"columns", cols}, {"rows", a.rows}});
      } else {
        out << a.to_text();
      }
      return ok;
    };
  });
  auto* tker = toric->add_subcommand("kernel", "Kernel by elimination");
  tker->add_option("--f", f_text, "f in t[1..k]");
  tker->add_option("--k", k, "Arity")->capture_default_str();
  tker->add_option("--n", n, "Level n");
  tker->add_option("--bind", bind_texts, "Explicit binding x[..]=image (repeatable)");
  tker->add_option("--order", order_text, "Term order on the x-variables");
  tker->callback([&] {
    action = [&] {
      std::vector<Binding> bindings;
      if (!bind_texts.empty()) {
        if (!f_text.empty()) throw UsageError("use either --f or --bind");
        for (const auto& b : bind_texts) {
          auto eq = b.find('=');
          if (eq == std::string::npos) throw UsageError("--bind expects x[..]=image");
          auto lhs = parse_monomial(b.substr(0, eq));
          if (lhs.factors().size() != 1 || lhs.factors()[0].exp != 1)
            throw UsageError("--bind left side must be a variable");
          bindings.emplace_back(lhs.factors()[0].var, parse_polynomial(b.substr(eq + 1)));
        }
      } else {
        if (f_text.empty() || !n) throw UsageError("toric kernel needs --f and --n, or --bind");
        s.level(n, "n");
        bindings = toric_bindings(parse_polynomial(f_text), k, n);
      }
      auto ord = order_of("grevlex");
      auto Q = kernel_by_elimination(bindings, ord, s.limits());
      detail::emit_list(out, s, "toric kernel", "kernel (" + ord.describe() + ")", Q.groebner(),
                        ord);
      return ok;
    };
  });
  auto* tsq = toric->add_subcommand("squarefree", "Square-free generating set of Q_n");
  tsq->add_option("--n", n, "Level n")->required();
  tsq->add_option("--k", k, "Arity")->required();
  tsq->callback([&] {
    action = [&] {
      s.level(n, "n");
      auto ord = TermOrder::deg_rev_lex();
      auto S = squarefree_generating_set(n, k, ord);
      detail::emit_list(out, s, "toric squarefree",
                        "square-free generating set, max variable size " +
                            std::to_string(max_variable_size(S)),
                        S, ord, {{"max_variable_size", max_variable_size(S)}});
      return ok;
    };
  });
  auto* texp = toric->add_subcommand("experiment", "Square-free stabilization experiment");
  texp->add_option("--k", k, "Arity")->required();
  texp->add_option("--n-hi", hi, "Window end")->required();
  texp->callback([&] {
    action = [&] {
      auto r = squarefree_stabilization_experiment(k, hi, s.limits(), s.max_level);
      bool good = r.all_agree && r.failures_above_4k == 0;
      if (s.json()) {
        json levels = json::array();
        for (const auto& l : r.levels)
          levels.push_back({{"n", l.n},
                            {"agree", l.agree},
                            {"squarefree_generators", l.squarefree_generators},
                            {"kernel_gb_size", l.kernel_gb_size},
                            {"max_variable_size", l.max_variable_size}});
        detail::emit_json(out, "toric experiment",
                          {{"k", r.k},
                           {"n_hi", r.n_hi},
                           {"levels", levels},
                           {"all_agree", r.all_agree},
                           {"M", r.M},
                           {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                           {"pairs_above_4k", r.pairs_above_4k},
                           {"failures_above_4k", r.failures_above_4k},
                           {"stabilization", io::to_json(r.stabilization, s.timing)}});
      } else {
        out << "k: " << r.k << ", window: " << r.k << ".." << r.n_hi << '\n';
        for (const auto& l : r.levels)
          out << "  n=" << l.n << " squarefree=" << l.squarefree_generators
              << " kernel_gb=" << l.kernel_gb_size << " max_variable_size="
              << l.max_variable_size << " agree=" << yes(l.agree) << '\n';
        out << "all levels agree: " << yes(r.all_agree) << '\n'
            << "M = " << r.M << '\n';
        if (r.bound) out << "bound max(N, kM) = " << *r.bound << '\n';
        out << "pairs with n > 4k checked: " << r.pairs_above_4k
            << ", failures: " << r.failures_above_4k << '\n'
            << io::to_text(r.stabilization, s.timing);
      }
      return good ? ok : negative;
    };
  });
  auto* tprobe = toric->add_subcommand("probe", "Window evidence for an arbitrary f");
  tprobe->add_option("--f", f_text, "f in t[1..k]")->required();
  tprobe->add_option("--k", k, "Arity")->required();
  tprobe->add_option("--n-hi", hi, "Window end")->required();
  tprobe->add_option("--check", check_texts, "Relation to test for membership (repeatable)");
  tprobe->callback([&] {
    action = [&] {
      auto rels = detail::gather(check_texts, "");
      for (const auto& r : rels) s.level(largest_index(std::span(&r, 1)), "relation level");
      ToricSpec spec{k, parse_polynomial(f_text)};
      auto r = conjecture_probe(spec, hi, rels, s.limits(), s.max_level);
      if (s.json()) {
        json mem = json::array();
        for (const auto& row : r.memberships)
          mem.push_back({{"relation", to_string(row.relation, TermOrder::deg_rev_lex())},
                         {"level", row.level},
                         {"member", row.member}});
        detail::emit_json(out, "toric probe",
                          {{"f", to_string(spec.f)},
                           {"k", k},
                           {"normalized",
                            {{"arity", r.normalized.arity},
                             {"tau", r.normalized.tau.to_cycles()},
                             {"f", to_string(r.normalized.f)}}},
                           {"invariance", io::to_json(r.invariance)},
                           {"stabilization", io::to_json(r.stabilization, s.timing)},
                           {"memberships", mem}});
      } else {
        out << "f: " << to_string(spec.f) << ", k: " << k << '\n'
            << "normalized: arity " << r.normalized.arity << ", tau "
            << r.normalized.tau.to_cycles() << ", f " << to_string(r.normalized.f) << '\n'
            << "invariance:\n"
            << io::to_text(r.invariance) << "stabilization:\n"
            << io::to_text(r.stabilization, s.timing);
        for (const auto& row : r.memberships)
          out << "member of Q_" << row.level << ": "
              << to_string(row.relation, TermOrder::deg_rev_lex()) << ": " << yes(row.member)
              << '\n';
      }
      return ok;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return cap;
  }
}

} // namespace symideal::cli
