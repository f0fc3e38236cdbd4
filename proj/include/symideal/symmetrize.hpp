#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "symideal/poly_core.hpp"

namespace symideal {

/// Distinct indices occurring in any variable of f, ascending.
inline std::vector<Index> index_support(const Polynomial& f) {
  std::set<Index> s;
  for (const auto& [m, c] : f.terms())
    for (const auto& fac : m.factors())
      for (Index i : fac.var.entries()) s.insert(i);
  return {s.begin(), s.end()};
}

inline Index largest_index(std::span<const Polynomial> polys) {
  Index n = 0;
  for (const auto& f : polys) {
    auto s = index_support(f);
    if (!s.empty()) n = std::max(n, s.back());
  }
  return n;
}

/// Calls `visit` with every injection of `support` into {1..m}, in
/// lexicographic order of the image tuples.
inline void for_each_injection(std::span<const Index> support, Index m,
                               const std::function<void(const Injection&)>& visit) {
  std::map<Index, Index> images;
  std::vector<bool> used(m + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == support.size()) {
      visit(Injection::from_images(images));
      return;
    }
    for (Index t = 1; t <= m; ++t) {
      if (used[t]) continue;
      used[t] = true;
      images[support[depth]] = t;
      rec(depth + 1);
      images.erase(support[depth]);
      used[t] = false;
    }
  };
  rec(0);
}

/// Generators of the m-symmetrization L_m(B): every image of every element of
/// B under injections of its index support into {1..m}, sign-normalized under
/// `order`, deduplicated and sorted. These generate the same ideal as the full
/// S_m orbit since a permutation only matters through its restriction to the
/// support.
inline std::vector<Polynomial> symmetrize(std::span<const Polynomial> basis, Index m,
                                          std::optional<Index> n = std::nullopt,
                                          const TermOrder& order = TermOrder::lex()) {
  const Index top = largest_index(basis);
  const Index level = n.value_or(top);
  if (level < top)
    throw UsageError("generators use index " + std::to_string(top) + " beyond level n = " +
                     std::to_string(level));
  if (m < level)
    throw UsageError("symmetrization target m = " + std::to_string(m) +
                     " is below the source level n = " + std::to_string(level));
  auto less = [&](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b, order); };
  std::set<Polynomial, decltype(less)> out(less);
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    const auto support = index_support(g);
    for_each_injection(support, m, [&](const Injection& pi) {
      out.insert(sign_normalized(act(pi, g), order));
    });
  }
  return {out.begin(), out.end()};
}

} // namespace symideal
