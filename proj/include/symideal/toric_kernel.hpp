#pragma once

#include <set>
#include <utility>
#include <vector>

#include "symideal/finite_gb.hpp"

namespace symideal {

/// x-variable together with its image polynomial in the auxiliaries t.
using Binding = std::pair<Variable, Polynomial>;

/// x_u -> f(t_{u_1}, ..., t_{u_k}) for every ordered k-tuple u over {1..n}.
inline std::vector<Binding> toric_bindings(const Polynomial& f, std::size_t k, Index n) {
  for (const auto& [m, c] : f.terms())
    for (const auto& fac : m.factors())
      if (fac.var.is_x() || fac.var.front() > k)
        throw UsageError("f must be a polynomial in t[1..k], found " + fac.var.to_string());
  std::vector<Binding> out;
  for (auto& v : level_universe(n, k)) {
    std::map<Index, Index> images;
    for (std::size_t j = 0; j < k; ++j) images[static_cast<Index>(j + 1)] = v.entries()[j];
    out.emplace_back(v, act(Injection::from_images(images), f));
  }
  return out;
}

/// Kernel of x -> image(x): eliminate every t from <x - image(x)>. The
/// returned ideal lives on the bound x-variables with `order`.
inline FiniteIdeal kernel_by_elimination(const std::vector<Binding>& bindings,
                                         TermOrder order = TermOrder::deg_rev_lex(),
                                         GbLimits limits = {}) {
  std::vector<Variable> universe;
  std::set<Variable> aux;
  std::vector<Polynomial> gens;
  for (const auto& [x, image] : bindings) {
    if (!x.is_x()) throw UsageError("binding target must be an x-variable");
    universe.push_back(x);
    for (const auto& [m, c] : image.terms())
      for (const auto& fac : m.factors()) {
        if (fac.var.is_x()) throw UsageError("binding image must be a polynomial in t");
        aux.insert(fac.var);
      }
    gens.push_back(Polynomial::variable(x) - image);
  }
  universe.insert(universe.end(), aux.begin(), aux.end());
  FiniteIdeal full(std::move(gens), std::move(universe), std::move(order), limits);
  return eliminate(full, aux);
}

} // namespace symideal
