#pragma once

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symideal/chains.hpp"
#include "symideal/toric_kernel.hpp"

namespace symideal {

/// f(y_1, ..., y_k), with y_j written as t[j].
struct ToricSpec {
  std::size_t k = 1;
  Polynomial f;
};

struct NormalizedF {
  std::size_t arity = 0; // i: the number of y's that occur
  Permutation tau;       // tau f is a polynomial in y_1..y_i
  Polynomial f;
};

/// Relabels the occurring y's to y_1..y_i keeping their relative order; the
/// others go, in order, to y_{i+1}..y_k.
inline NormalizedF normalize_f(const ToricSpec& spec) {
  if (spec.f.is_zero()) throw UsageError("toric map needs f != 0");
  std::set<Index> occurring;
  for (const auto& [m, c] : spec.f.terms())
    for (const auto& fac : m.factors()) {
      if (fac.var.is_x() || fac.var.front() > spec.k)
        throw UsageError("f must be a polynomial in t[1..k], found " + fac.var.to_string());
      occurring.insert(fac.var.front());
    }
  std::map<Index, Index> images;
  Index next = 1;
  for (Index j : occurring) images[j] = next++;
  for (Index j = 1; j <= spec.k; ++j)
    if (!occurring.count(j)) images[j] = next++;
  NormalizedF out;
  out.arity = occurring.size();
  out.tau = Permutation::from_images(images);
  out.f = act(out.tau, spec.f);
  return out;
}

inline std::string compact_label(const Variable& v) {
  bool small = std::all_of(v.entries().begin(), v.entries().end(), [](Index i) { return i < 10; });
  if (!small) return v.to_string();
  std::string s = "x";
  for (Index i : v.entries()) s += std::to_string(i);
  return s;
}

/// Increasing k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<Index>> sorted_tuples(Index n, std::size_t k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  std::function<void(Index)> rec = [&](Index from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Index i = from; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// The 0/1 matrix whose columns are the indicator vectors of the increasing
/// k-subsets of {1..n}.
struct SortingMatrix {
  Index n = 0;
  std::size_t k = 0;
  std::vector<std::vector<Index>> columns;
  std::vector<std::vector<int>> rows; // rows[i][j]: is i+1 in columns[j]

  std::string to_text() const {
    std::vector<std::string> labels;
    for (const auto& c : columns) labels.push_back(compact_label(Variable::x(c)));
    const std::size_t w0 = ("t" + std::to_string(n)).size();
    std::ostringstream os;
    os << std::string(w0, ' ');
    for (const auto& l : labels) os << ' ' << l;
    os << '\n';
    for (Index i = 0; i < n; ++i) {
      os << std::left << std::setw(static_cast<int>(w0)) << ("t" + std::to_string(i + 1))
         << std::right;
      for (std::size_t j = 0; j < columns.size(); ++j)
        os << ' ' << std::setw(static_cast<int>(labels[j].size())) << rows[i][j];
      os << '\n';
    }
    return os.str();
  }
};

inline SortingMatrix sorting_matrix(Index n, std::size_t k) {
  if (k < 1 || n < k) throw UsageError("sorting matrix needs n >= k >= 1");
  SortingMatrix a;
  a.n = n;
  a.k = k;
  a.columns = sorted_tuples(n, k);
  a.rows.assign(n, std::vector<int>(a.columns.size(), 0));
  for (std::size_t j = 0; j < a.columns.size(); ++j)
    for (Index i : a.columns[j]) a.rows[i - 1][j] = 1;
  return a;
}

inline std::vector<Index> sort_word(std::vector<Index> word) {
  std::sort(word.begin(), word.end());
  return word;
}

/// Merges the entries of two increasing tuples and deals them out
/// alternately: odd positions to u', even positions to v'. Shared entries are
/// allowed; since each value occurs at most twice, u' and v' stay increasing
/// with distinct entries.
inline std::pair<std::vector<Index>, std::vector<Index>> sorted_pair(const std::vector<Index>& u,
                                                                     const std::vector<Index>& v) {
  if (u.size() != v.size()) throw UsageError("sorted_pair needs tuples of equal length");
  auto check = [](const std::vector<Index>& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i - 1] >= w[i]) throw UsageError("sorted_pair needs strictly increasing tuples");
  };
  check(u);
  check(v);
  std::vector<Index> all;
  std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(all));
  std::pair<std::vector<Index>, std::vector<Index>> out;
  for (std::size_t i = 0; i < all.size(); ++i) (i % 2 == 0 ? out.first : out.second).push_back(all[i]);
  return out;
}

/// Generators of Q_n for f = y_1...y_k: x_u - x_sort(u) for every unsorted u,
/// and x_u x_v - x_u' x_v' for every pair of increasing tuples whose
/// alternating split (u', v') differs from {u, v}. Sign-normalized and sorted.
inline std::vector<Polynomial> squarefree_generating_set(Index n, std::size_t k,
                                                         const TermOrder& order =
                                                             TermOrder::deg_rev_lex()) {
  if (k < 1 || n < k) throw UsageError("square-free generating set needs n >= k >= 1");
  auto less = [&](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b, order); };
  std::set<Polynomial, decltype(less)> out(less);
  auto x = [](const std::vector<Index>& u) { return Polynomial::variable(Variable::x(u)); };
  for (const auto& v : level_universe(n, k)) {
    std::vector<Index> u(v.entries().begin(), v.entries().end());
    auto s = sort_word(u);
    if (s != u) out.insert(sign_normalized(x(u) - x(s), order));
  }
  const auto sorted = sorted_tuples(n, k);
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      auto [p, q] = sorted_pair(sorted[a], sorted[b]);
      if (p == sorted[a] && q == sorted[b]) continue;
      out.insert(sign_normalized(x(sorted[a]) * x(sorted[b]) - x(p) * x(q), order));
    }
  return {out.begin(), out.end()};
}

inline Polynomial squarefree_f(std::size_t k) {
  Polynomial f = Polynomial::constant(1);
  for (Index j = 1; j <= k; ++j) f = f * Polynomial::variable(Variable::t(j));
  return f;
}

struct ExperimentLevel {
  Index n = 0;
  bool agree = false; // squarefree set and elimination give the same ideal
  std::size_t squarefree_generators = 0;
  std::size_t kernel_gb_size = 0;
  std::size_t max_variable_size = 0;
};

struct ExperimentReport {
  std::size_t k = 0;
  Index n_hi = 0;
  std::vector<ExperimentLevel> levels;
  bool all_agree = true;
  std::size_t M = 0;                 // largest generator variable size
  std::optional<Index> bound;        // max(N, k*M) when N was found
  std::size_t pairs_above_4k = 0;    // checked pairs with n > 4k
  std::size_t failures_above_4k = 0; // of which unequal
  StabilizationReport stabilization;
};

/// Q_n for f = y_1...y_k built by elimination and from the square-free
/// generating set, compared level by level, then the window stabilization
/// scan. Evidence on the window only.
inline ExperimentReport squarefree_stabilization_experiment(std::size_t k, Index n_hi,
                                                            GbLimits limits = {},
                                                            Index max_level = 8) {
  if (k < 1) throw UsageError("k must be positive");
  if (k > 3) throw CapExceeded("max-arity", "k = " + std::to_string(k) + " > 3");
  if (n_hi > max_level)
    throw CapExceeded("max-level", "n = " + std::to_string(n_hi) + " > " + std::to_string(max_level));
  if (n_hi < k) throw UsageError("window end must be at least k");
  ExperimentReport rep;
  rep.k = k;
  rep.n_hi = n_hi;
  ChainSpec::Explicit levels;
  const auto f = squarefree_f(k);
  for (Index n = static_cast<Index>(k); n <= n_hi; ++n) {
    const TermOrder order = TermOrder::deg_rev_lex();
    FiniteIdeal Q = kernel_by_elimination(toric_bindings(f, k, n), order, limits);
    auto sf = squarefree_generating_set(n, k, order);
    FiniteIdeal S(sf, level_universe(n, k), order, limits);
    ExperimentLevel row{n, ideal_equal(Q, S), sf.size(), Q.groebner().size(),
                        max_variable_size(sf)};
    rep.all_agree = rep.all_agree && row.agree;
    rep.M = std::max(rep.M, row.max_variable_size);
    rep.levels.push_back(row);
    levels.levels[n] = Q.groebner();
  }
  ChainSpec chain;
  chain.arity = k;
  chain.first_level = static_cast<Index>(k);
  chain.kind = std::move(levels);
  chain.limits = limits;
  rep.stabilization = detect_stabilization(chain, n_hi);
  if (rep.stabilization.N)
    rep.bound = std::max<Index>(*rep.stabilization.N, static_cast<Index>(k * rep.M));
  for (const auto& p : rep.stabilization.pairs)
    if (p.n > 4 * k) {
      ++rep.pairs_above_4k;
      if (!p.equal) ++rep.failures_above_4k;
    }
  return rep;
}

struct MembershipRow {
  Polynomial relation;
  Index level = 0;
  bool member = false;
};

struct ProbeReport {
  ToricSpec spec;
  NormalizedF normalized;
  InvarianceReport invariance;
  StabilizationReport stabilization;
  std::vector<MembershipRow> memberships;
};

/// Window evidence for the kernel chain of an arbitrary f: invariance,
/// stabilization scan, and membership of the given relations in Q_n at the
/// smallest level containing them.
inline ProbeReport conjecture_probe(const ToricSpec& spec, Index n_hi,
                                    std::span<const Polynomial> relations = {},
                                    GbLimits limits = {}, Index max_level = 8) {
  if (n_hi > max_level)
    throw CapExceeded("max-level", "n = " + std::to_string(n_hi) + " > " + std::to_string(max_level));
  ProbeReport rep;
  rep.spec = spec;
  rep.normalized = normalize_f(spec);
  ChainSpec chain = ChainSpec::toric(spec.f, spec.k);
  chain.limits = limits;
  if (n_hi < chain.first_level) throw UsageError("window end must be at least k");
  rep.invariance = invariance_check(chain, chain.first_level, n_hi);
  rep.stabilization = detect_stabilization(chain, n_hi);
  for (const auto& r : relations) {
    if (r.x_arity() != 0 && r.x_arity() != spec.k)
      throw UsageError("relation arity does not match k");
    Index level = std::max<Index>(largest_index(std::span(&r, 1)), chain.first_level);
    if (level > max_level)
      throw CapExceeded("max-level", "relation needs n = " + std::to_string(level) + " > " +
                                         std::to_string(max_level));
    rep.memberships.push_back({r, level, membership(r, chain.ideal(level))});
  }
  return rep;
}

} // namespace symideal
