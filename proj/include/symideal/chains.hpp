#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "symideal/finite_gb.hpp"
#include "symideal/symmetrize.hpp"
#include "symideal/toric_kernel.hpp"

namespace symideal {

/// Number of distinct variables occurring in g.
inline std::size_t variable_size(const Polynomial& g) {
  std::set<Variable> vars;
  for (const auto& [m, c] : g.terms())
    for (const auto& f : m.factors()) vars.insert(f.var);
  return vars.size();
}

inline std::size_t max_variable_size(std::span<const Polynomial> gens) {
  std::size_t s = 0;
  for (const auto& g : gens) s = std::max(s, variable_size(g));
  return s;
}

/// Generators of P_n(B) for B in R_m: the reduced basis of the invariant
/// ideal generated by B in R_m, intersected with R_n.
inline std::vector<Polynomial> project(std::span<const Polynomial> basis, Index m, Index n,
                                       TermOrder order = TermOrder::deg_rev_lex(),
                                       GbLimits limits = {}) {
  if (n > m) throw UsageError("projection level n = " + std::to_string(n) + " exceeds m = " +
                              std::to_string(m));
  std::size_t k = 0;
  for (const auto& g : basis) k = common_arity(k, g.x_arity());
  if (k == 0) k = 1;
  auto sym = symmetrize(basis, m, m, order);
  std::set<Variable> drop;
  for (const auto& v : level_universe(m, k))
    if (v.largest_entry() > n) drop.insert(v);
  FiniteIdeal I(std::move(sym), level_universe(m, k), std::move(order), limits);
  return eliminate(I, drop).groebner();
}

/// A chain I_{n0} <= I_{n0+1} <= ... of ideals I_n of R_n.
struct ChainSpec {
  /// Per-level generator sets.
  struct Explicit {
    std::map<Index, std::vector<Polynomial>> levels;
  };
  /// I_n = kernel of x_u -> f(t_{u_1}, ..., t_{u_k}).
  struct Toric {
    Polynomial f;
  };
  /// Generators of I_n computed by a callback.
  struct Rule {
    std::string name;
    std::function<std::vector<Polynomial>(Index)> make;
  };

  std::size_t arity = 1;
  Index first_level = 1;
  std::variant<Explicit, Toric, Rule> kind;
  TermOrder order = TermOrder::deg_rev_lex();
  GbLimits limits;

  std::string kind_name() const {
    if (std::holds_alternative<Explicit>(kind)) return "explicit";
    if (std::holds_alternative<Toric>(kind)) return "toric";
    return "rule:" + std::get<Rule>(kind).name;
  }

  /// The ideal I_n on the universe of R_n.
  FiniteIdeal ideal(Index n) const {
    if (n < first_level)
      throw UsageError("level " + std::to_string(n) + " is below the first level " +
                       std::to_string(first_level));
    if (const auto* t = std::get_if<Toric>(&kind))
      return kernel_by_elimination(toric_bindings(t->f, arity, n), order, limits);
    std::vector<Polynomial> gens;
    if (const auto* e = std::get_if<Explicit>(&kind)) {
      auto it = e->levels.find(n);
      if (it == e->levels.end())
        throw UsageError("chain has no generators for level " + std::to_string(n));
      gens = it->second;
    } else {
      gens = std::get<Rule>(kind).make(n);
    }
    if (largest_index(gens) > n)
      throw UsageError("level " + std::to_string(n) + " generators use larger indices");
    return FiniteIdeal(std::move(gens), level_universe(n, arity), order, limits);
  }

  /// Rule chain I_n = L_n(gens) for gens in R_{n0}.
  static ChainSpec orbit(std::vector<Polynomial> gens, std::size_t k, Index n0) {
    ChainSpec c;
    c.arity = k;
    c.first_level = n0;
    c.kind = Rule{"orbit", [gens, n0, order = c.order](Index n) {
                    return symmetrize(gens, n, n0, order);
                  }};
    return c;
  }

  /// Rule chain I_n = <gens> in R_n for every n.
  static ChainSpec constant(std::vector<Polynomial> gens, std::size_t k, Index n0) {
    ChainSpec c;
    c.arity = k;
    c.first_level = n0;
    c.kind = Rule{"constant", [gens](Index) { return gens; }};
    return c;
  }

  static ChainSpec toric(Polynomial f, std::size_t k, std::optional<Index> n0 = std::nullopt) {
    ChainSpec c;
    c.arity = k;
    c.first_level = n0.value_or(static_cast<Index>(std::max<std::size_t>(k, 1)));
    c.kind = Toric{std::move(f)};
    return c;
  }
};

namespace detail {

/// Reduced bases of I_n over a window, computed once per level.
class LevelCache {
public:
  explicit LevelCache(const ChainSpec& chain) : chain_(chain) {}

  const FiniteIdeal& at(Index n) {
    auto it = levels_.find(n);
    if (it == levels_.end()) it = levels_.emplace(n, chain_.ideal(n)).first;
    return it->second;
  }

private:
  const ChainSpec& chain_;
  std::map<Index, FiniteIdeal> levels_;
};

inline double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

struct InvarianceRow {
  Index n = 0, m = 0;
  bool symmetrization = true; // L_m(I_n) <= I_m
  bool projection = true;     // P_n(I_m) <= I_n
};

struct InvarianceReport {
  Index n_lo = 0, n_hi = 0;
  bool holds = true;
  std::vector<InvarianceRow> rows;
};

/// Both chain inclusions for every n < m in the window, by membership of
/// the symmetrized resp. projected generators.
inline InvarianceReport invariance_check(const ChainSpec& chain, Index n_lo, Index n_hi) {
  if (n_lo < chain.first_level || n_hi < n_lo) throw UsageError("invalid window");
  detail::LevelCache cache(chain);
  InvarianceReport rep{n_lo, n_hi, true, {}};
  for (Index n = n_lo; n <= n_hi; ++n)
    for (Index m = n + 1; m <= n_hi; ++m) {
      InvarianceRow row{n, m, true, true};
      const auto& In = cache.at(n);
      const auto& Im = cache.at(m);
      row.symmetrization =
          contains_all(Im, symmetrize(In.groebner(), m, n, chain.order));
      row.projection = contains_all(In, project(Im.groebner(), m, n, chain.order, chain.limits));
      rep.holds = rep.holds && row.symmetrization && row.projection;
      rep.rows.push_back(row);
    }
  return rep;
}

struct StabilizationPair {
  Index n = 0, m = 0;
  bool equal = false;
  std::size_t symmetrized_gb_size = 0; // reduced basis of L_m(I_n)
  std::size_t level_gb_size = 0;       // reduced basis of I_m
  double millis = 0;
};

struct LevelStats {
  Index n = 0;
  std::size_t generators = 0;
  std::size_t gb_size = 0;
  std::size_t max_variable_size = 0;
  double millis = 0;
};

/// Window certificate: N is the least level in [n_lo, n_hi) with
/// L_m(I_n) = I_m for all N <= n < m <= n_hi; nothing beyond n_hi is claimed.
struct StabilizationReport {
  Index n_lo = 0, n_hi = 0;
  std::optional<Index> N;
  std::vector<StabilizationPair> pairs;
  std::vector<LevelStats> levels;
};

inline StabilizationReport detect_stabilization(const ChainSpec& chain, Index n_hi) {
  const Index n_lo = chain.first_level;
  if (n_hi < n_lo) throw UsageError("window end is below the first level");
  detail::LevelCache cache(chain);
  StabilizationReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (Index n = n_lo; n <= n_hi; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    const auto& I = cache.at(n);
    const auto& gb = I.groebner();
    rep.levels.push_back(
        {n, I.generators().size(), gb.size(), max_variable_size(gb), detail::millis_since(t0)});
  }
  // bad[n]: some pair (n, m) fails
  std::map<Index, bool> bad;
  for (Index n = n_lo; n <= n_hi; ++n)
    for (Index m = n + 1; m <= n_hi; ++m) {
      auto t0 = std::chrono::steady_clock::now();
      const auto& In = cache.at(n);
      const auto& Im = cache.at(m);
      FiniteIdeal L(symmetrize(In.groebner(), m, n, chain.order), Im.universe(), chain.order,
                    chain.limits);
      bool eq = ideal_equal(L, Im);
      rep.pairs.push_back(
          {n, m, eq, L.groebner().size(), Im.groebner().size(), detail::millis_since(t0)});
      if (!eq) bad[n] = true;
    }
  std::optional<Index> N;
  for (Index n = n_hi; n-- > n_lo;) {
    if (bad[n]) break;
    N = n;
  }
  rep.N = N;
  return rep;
}

} // namespace symideal
