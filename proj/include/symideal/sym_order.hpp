#pragma once

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "symideal/poly_core.hpp"

namespace symideal {

enum class Greedy { leftmost, rightmost };

/// Strictly increasing position map phi (phi[i-1] is the 1-based image of
/// position i) with profile(v)[i] <= profile(w)[phi(i)], or nothing.
///
/// Greedy matching is complete: if any embedding exists, matching each
/// position of v to the first feasible position of w (scanning left to right)
/// also succeeds, since any embedding can be exchanged position by position
/// for the greedy one. The right-to-left scan is the mirror argument.
inline std::optional<std::vector<Index>> higman_embed(const Monomial& v, const Monomial& w,
                                                      Greedy side = Greedy::leftmost) {
  const auto pv = profile(v);
  const auto pw = profile(w);
  if (pv.size() > pw.size()) return std::nullopt;
  std::vector<Index> phi(pv.size());
  if (side == Greedy::leftmost) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < pv.size(); ++i, ++j) {
      while (j < pw.size() && pw[j] < pv[i]) ++j;
      if (j == pw.size()) return std::nullopt;
      phi[i] = static_cast<Index>(j + 1);
    }
  } else {
    std::size_t j = pw.size();
    for (std::size_t i = pv.size(); i-- > 0;) {
      while (j > 0 && pw[j - 1] < pv[i]) --j;
      if (j == 0) return std::nullopt;
      phi[i] = static_cast<Index>(j);
      --j;
    }
  }
  return phi;
}

/// Outcome of testing v <= w in the symmetric cancellation ordering.
/// When `related`, sigma*v divides w, cofactor*sigma*v == w, and sigma fixes
/// every index above |w|.
struct WitnessReport {
  bool related = false;
  std::optional<std::vector<Index>> phi;
  std::optional<Permutation> sigma;
  std::optional<Monomial> cofactor;
};

/// Extend an increasing position map on {1..|v|} to a permutation of {1..n}:
/// the positions above |v| go, in increasing order, to the unused targets.
inline Permutation extend_to_permutation(std::span<const Index> phi, Index n) {
  std::map<Index, Index> images;
  std::set<Index> unused;
  for (Index i = 1; i <= n; ++i) unused.insert(i);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    images[static_cast<Index>(i + 1)] = phi[i];
    unused.erase(phi[i]);
  }
  auto it = unused.begin();
  for (Index i = static_cast<Index>(phi.size()) + 1; i <= n; ++i) images[i] = *it++;
  return Permutation::from_images(images);
}

/// Certified sufficient test for v <= w in the symmetric cancellation ordering
/// of lex and the symmetric group: v <=_lex w and the profile of v
/// Higman-embeds in the profile of w. The witness comes from the rightmost
/// greedy embedding, which shifts v as far up as possible.
inline WitnessReport cancellation_witness(const Monomial& v, const Monomial& w) {
  WitnessReport r;
  if (TermOrder::lex().compare(v, w) > 0) return r;
  auto phi = higman_embed(v, w, Greedy::rightmost);
  if (!phi) return r;
  const Index top = max_index(w).value_or(0);
  Permutation sigma = extend_to_permutation(*phi, top);
  auto u = quotient(act(sigma, v), w);
  if (!u) throw std::logic_error("embedding did not produce a divisor");
  r.related = true;
  r.phi = std::move(phi);
  r.sigma = std::move(sigma);
  r.cofactor = std::move(*u);
  return r;
}

/// The implemented relation as a predicate.
inline bool cancellation_related(const Monomial& v, const Monomial& w) {
  return TermOrder::lex().compare(v, w) <= 0 && higman_embed(v, w).has_value();
}

namespace detail {

inline std::vector<Index> index_support(const Monomial& m) {
  std::set<Index> s;
  for (const auto& f : m.factors())
    for (Index i : f.var.entries()) s.insert(i);
  return {s.begin(), s.end()};
}

struct InjectionSearch {
  const Monomial& v;
  const Monomial& w;
  std::vector<Index> support;
  std::vector<Index> targets;
  std::map<Index, Index> assign;
  std::set<Index> used;
  // factors of v that become fully assigned once support[i] is assigned
  std::vector<std::vector<const Monomial::Factor*>> ready;

  InjectionSearch(const Monomial& v_, const Monomial& w_) : v(v_), w(w_) {
    support = index_support(v);
    targets = index_support(w);
    ready.resize(support.size());
    for (const auto& f : v.factors()) {
      std::size_t last = 0;
      for (Index i : f.var.entries()) {
        auto pos = static_cast<std::size_t>(
            std::lower_bound(support.begin(), support.end(), i) - support.begin());
        last = std::max(last, pos);
      }
      ready[last].push_back(&f);
    }
  }

  bool factors_fit(std::size_t depth) const {
    for (const auto* f : ready[depth]) {
      Variable::Entries e;
      for (Index i : f->var.entries()) e.push_back(assign.at(i));
      if (w.exponent(Variable(f->var.kind(), e)) < f->exp) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == support.size()) return true;
    for (Index t : targets) {
      if (used.count(t)) continue;
      assign[support[depth]] = t;
      used.insert(t);
      if (factors_fit(depth) && run(depth + 1)) return true;
      used.erase(t);
      assign.erase(support[depth]);
    }
    return false;
  }
};

} // namespace detail

/// An injection pi on the index support of v with pi*v dividing w, i.e. the
/// quasi-ordering v |_G w for the symmetric group. Backtracks over support
/// indices in increasing order, trying targets in increasing order, so the
/// result is the lexicographically first such injection. Nothing means no
/// permutation at all maps v to a divisor of w.
inline std::optional<Injection> injection_divisor(const Monomial& v, const Monomial& w) {
  common_arity(v.x_arity(), w.x_arity());
  if (v.degree() > w.degree()) return std::nullopt;
  detail::InjectionSearch search(v, w);
  if (!search.run(0)) return std::nullopt;
  return Injection::from_images(search.assign);
}

enum class Relation { higman, injection };

inline bool related(const Monomial& v, const Monomial& w, Relation rel) {
  return rel == Relation::higman ? cancellation_related(v, w)
                                 : injection_divisor(v, w).has_value();
}

/// First pair (i, j), i < j, 1-based, in lexicographic order with
/// seq[i] related to seq[j].
inline std::optional<std::pair<std::size_t, std::size_t>> goodness_scan(
    std::span<const Monomial> seq, Relation rel) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (related(seq[i], seq[j], rel)) return std::pair{i + 1, j + 1};
  return std::nullopt;
}

/// s_n = x_(1,2) x_(3,2) x_(4,3) ... x_(n,n-1) x_(n,n+1), n >= 3: pairwise
/// incomparable under divisibility up to permutations.
inline Monomial bad_sequence_element(Index n) {
  if (n < 3) throw UsageError("bad sequence starts at n = 3");
  std::vector<Monomial::Factor> fs;
  fs.push_back({Variable::x({1, 2}), 1});
  fs.push_back({Variable::x({3, 2}), 1});
  for (Index i = 4; i <= n; ++i) fs.push_back({Variable::x({i, i - 1}), 1});
  fs.push_back({Variable::x({n, n + 1}), 1});
  return Monomial(std::move(fs));
}

} // namespace symideal
