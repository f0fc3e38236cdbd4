#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "symideal/chains.hpp"
#include "symideal/equi_reduce.hpp"
#include "symideal/sym_order.hpp"
#include "symideal/toric.hpp"

namespace symideal::io {

using nlohmann::json;

inline constexpr const char* schema = "symideal/1";

/// One polynomial per line; blank lines and '#' comments are skipped.
inline std::vector<Polynomial> parse_polynomial_lines(std::istream& in) {
  std::vector<Polynomial> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_polynomial(line, lineno));
  }
  return out;
}

inline std::vector<Polynomial> read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return parse_polynomial_lines(in);
}

inline TermOrder parse_order(const std::string& text) {
  if (text == "lex") return TermOrder::lex();
  if (text == "grevlex") return TermOrder::deg_rev_lex();
  if (text.rfind("plex", 0) == 0) {
    auto rest = text.substr(4);
    if (!rest.empty() && rest.front() == ':') rest.erase(0, 1);
    return TermOrder::permuted_lex(Permutation::parse(rest));
  }
  throw UsageError("unknown term order '" + text + "' (lex, grevlex, plex:(...))");
}

inline json poly_list(std::span<const Polynomial> ps, const TermOrder& order) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, order));
  return a;
}

inline std::string phi_to_string(std::span<const Index> phi) {
  std::string s;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(i + 1) + "->" + std::to_string(phi[i]);
  }
  return "{" + s + "}";
}

inline json to_json(const WitnessReport& r) {
  json j{{"related", r.related}};
  if (r.phi) j["phi"] = *r.phi;
  if (r.sigma) j["sigma"] = r.sigma->to_cycles();
  if (r.cofactor) j["cofactor"] = to_string(*r.cofactor);
  return j;
}

inline json to_json(const ReductionStep& s) {
  return {{"generator", s.generator_index + 1},
          {"sigma", s.sigma.to_cycles()},
          {"term", term_to_string(s.coefficient, s.cofactor)}};
}

inline json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return {{"steps", steps}, {"residue", to_string(t.residue)}};
}

inline json to_json(const StabilizationReport& r, bool timing) {
  json j{{"window", {r.n_lo, r.n_hi}}, {"N", r.N ? json(*r.N) : json(nullptr)}};
  json levels = json::array();
  for (const auto& l : r.levels) {
    json row{{"n", l.n},
             {"generators", l.generators},
             {"gb_size", l.gb_size},
             {"max_variable_size", l.max_variable_size}};
    if (timing) row["ms"] = l.millis;
    levels.push_back(row);
  }
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json row{{"n", p.n},
             {"m", p.m},
             {"equal", p.equal},
             {"symmetrized_gb_size", p.symmetrized_gb_size},
             {"level_gb_size", p.level_gb_size}};
    if (timing) row["ms"] = p.millis;
    pairs.push_back(row);
  }
  j["levels"] = levels;
  j["pairs"] = pairs;
  return j;
}

inline json to_json(const InvarianceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"m", row.m},
                    {"symmetrization", row.symmetrization},
                    {"projection", row.projection}});
  return {{"window", {r.n_lo, r.n_hi}}, {"holds", r.holds}, {"pairs", rows}};
}

inline std::string to_text(const StabilizationReport& r, bool timing) {
  std::ostringstream os;
  os << "window: " << r.n_lo << ".." << r.n_hi << '\n';
  os << "levels:\n";
  for (const auto& l : r.levels) {
    os << "  n=" << l.n << " generators=" << l.generators << " gb=" << l.gb_size
       << " max_variable_size=" << l.max_variable_size;
    if (timing) os << " ms=" << l.millis;
    os << '\n';
  }
  os << "pairs:\n";
  for (const auto& p : r.pairs) {
    os << "  L_" << p.m << "(I_" << p.n << ") " << (p.equal ? "==" : "!=") << " I_" << p.m
       << "  gb " << p.symmetrized_gb_size << " vs " << p.level_gb_size;
    if (timing) os << " ms=" << p.millis;
    os << '\n';
  }
  if (r.N)
    os << "stabilized: N = " << *r.N << " (window certificate up to n = " << r.n_hi << ")\n";
  else
    os << "stabilized: not within window\n";
  return os.str();
}

inline std::string to_text(const InvarianceReport& r) {
  std::ostringstream os;
  os << "window: " << r.n_lo << ".." << r.n_hi << '\n';
  for (const auto& row : r.rows)
    os << "  (" << row.n << "," << row.m << ") L_m(I_n) <= I_m: "
       << (row.symmetrization ? "yes" : "no")
       << "  P_n(I_m) <= I_n: " << (row.projection ? "yes" : "no") << '\n';
  os << "invariant: " << (r.holds ? "yes" : "no") << '\n';
  return os.str();
}

/// Chain document:
///   {"arity": k, "first_level": n0, "order": "grevlex",
///    "kind": "explicit", "levels": {"1": ["x[1]"], ...}}
///   {"kind": "toric", "f": "t[1]*t[2]"}
///   {"kind": "orbit" | "constant", "generators": [...]}
inline ChainSpec chain_from_json(const json& doc) {
  try {
    if (doc.contains("schema") && doc.at("schema") != schema)
      throw UsageError("unsupported chain schema " + doc.at("schema").dump());
    const std::size_t k = doc.value("arity", std::size_t{1});
    const auto kind = doc.at("kind").get<std::string>();
    auto polys = [](const json& a) {
      std::vector<Polynomial> out;
      std::size_t line = 0;
      for (const auto& s : a) out.push_back(parse_polynomial(s.get<std::string>(), ++line));
      return out;
    };
    ChainSpec c;
    if (kind == "toric") {
      c = ChainSpec::toric(parse_polynomial(doc.at("f").get<std::string>()), k);
    } else if (kind == "orbit" || kind == "constant") {
      auto gens = polys(doc.at("generators"));
      Index n0 = doc.value("first_level", std::max<Index>(1, largest_index(gens)));
      c = kind == "orbit" ? ChainSpec::orbit(gens, k, n0) : ChainSpec::constant(gens, k, n0);
    } else if (kind == "explicit") {
      ChainSpec::Explicit e;
      for (const auto& [key, gens] : doc.at("levels").items())
        e.levels[static_cast<Index>(std::stoul(key))] = polys(gens);
      if (e.levels.empty()) throw UsageError("explicit chain has no levels");
      c.arity = k;
      c.first_level = e.levels.begin()->first;
      c.kind = std::move(e);
    } else {
      throw UsageError("unknown chain kind '" + kind + "'");
    }
    if (doc.contains("first_level")) c.first_level = doc.at("first_level").get<Index>();
    if (doc.contains("order")) {
      c.order = parse_order(doc.at("order").get<std::string>());
      if (auto* r = std::get_if<ChainSpec::Rule>(&c.kind); r && r->name == "orbit") {
        auto gens = polys(doc.at("generators"));
        Index n0 = c.first_level;
        r->make = [gens, n0, order = c.order](Index n) { return symmetrize(gens, n, n0, order); };
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed chain document: ") + e.what());
  }
}

inline json chain_to_json(const ChainSpec& c, std::span<const Index> levels = {}) {
  json j{{"schema", schema},
         {"arity", c.arity},
         {"first_level", c.first_level},
         {"order", c.order.describe()},
         {"kind", c.kind_name()}};
  if (const auto* t = std::get_if<ChainSpec::Toric>(&c.kind)) j["f"] = to_string(t->f);
  json lv = json::object();
  for (Index n : levels) lv[std::to_string(n)] = poly_list(c.ideal(n).generators(), c.order);
  if (const auto* e = std::get_if<ChainSpec::Explicit>(&c.kind))
    for (const auto& [n, gens] : e->levels) lv[std::to_string(n)] = poly_list(gens, c.order);
  if (!lv.empty()) j["levels"] = lv;
  return j;
}

inline ChainSpec read_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("chain file is not valid JSON: ") + e.what(), 0, e.byte);
  }
  return chain_from_json(doc);
}

} // namespace symideal::io
