#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "symideal/permutation.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

/// Anything that maps indices injectively: Permutation, Injection.
template <class M>
concept IndexMapping = requires(const M& m, Index i) {
  { m.image(i) } -> std::same_as<std::optional<Index>>;
};

/// Entrywise action on index tuples; applies to x and t variables alike.
template <IndexMapping M>
Variable act(const M& g, const Variable& v) {
  Variable::Entries e;
  e.reserve(v.arity());
  for (Index i : v.entries()) {
    auto img = g.image(i);
    if (!img) throw UsageError("map is undefined on index " + std::to_string(i));
    e.push_back(*img);
  }
  return Variable(v.kind(), std::move(e));
}

template <IndexMapping M>
Monomial act(const M& g, const Monomial& w) {
  std::vector<Monomial::Factor> fs;
  fs.reserve(w.factors().size());
  for (const auto& f : w.factors()) fs.push_back({act(g, f.var), f.exp});
  return Monomial(std::move(fs));
}

template <IndexMapping M>
Polynomial act(const M& g, const Polynomial& f) {
  Polynomial::TermMap t;
  for (const auto& [m, c] : f.terms()) t.emplace(act(g, m), c);
  return Polynomial(std::move(t));
}

/// Shift every index up by `by` (x_i -> x_{i+by}).
struct IndexShift {
  Index by = 1;
  std::optional<Index> image(Index i) const { return i + by; }
};

} // namespace symideal
