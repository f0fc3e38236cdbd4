#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "symideal/poly_core.hpp"

namespace symideal {

/// Hard resource caps for completion; exceeding one throws CapExceeded.
struct GbLimits {
  std::uint32_t max_degree = 40;
  std::size_t max_pairs = 200000;
};

/// x_1..x_n for arity 1, otherwise every ordered k-tuple of distinct entries
/// from {1..n}; ascending in the variable ranking.
inline std::vector<Variable> level_universe(Index n, std::size_t k) {
  std::vector<Variable> out;
  if (k == 0) return out;
  Variable::Entries cur;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&] {
    if (cur.size() == k) {
      out.emplace_back(VarKind::x, cur);
      return;
    }
    for (Index i = 1; i <= n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  rec();
  return out;
}

inline std::vector<Variable> aux_universe(Index n) {
  std::vector<Variable> out;
  for (Index i = 1; i <= n; ++i) out.push_back(Variable::t(i));
  return out;
}

namespace detail {

using Exp = std::uint16_t;

/// Dense exponent vector over a fixed universe, with total degree and a
/// 64-bit support signature for quick non-divisibility tests.
struct DMono {
  std::vector<Exp> e;
  std::uint32_t deg = 0;
  std::uint64_t mask = 0;

  void refresh() {
    deg = 0;
    mask = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i]) mask |= std::uint64_t{1} << (i & 63);
    }
  }
  friend bool operator==(const DMono& a, const DMono& b) { return a.e == b.e; }
};

struct DTerm {
  DMono m;
  Rational c;
};

/// Terms strictly descending in the ring's order.
using DPoly = std::vector<DTerm>;

/// A universe of variables laid out in slots, most significant first, with
/// the term order compiled into lex / reverse-lex blocks.
class DenseRing {
public:
  DenseRing(std::vector<Variable> universe, const TermOrder& order) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    plan(order, universe);
    for (std::size_t i = 0; i < slots_.size(); ++i) slot_of_.emplace(slots_[i], i);
  }

  std::size_t size() const noexcept { return slots_.size(); }
  bool contains(const Variable& v) const { return slot_of_.count(v) > 0; }
  const Variable& variable(std::size_t slot) const { return slots_[slot]; }

  int compare(const DMono& a, const DMono& b) const {
    for (const auto& blk : blocks_) {
      if (!blk.rev) {
        for (std::size_t s = blk.begin; s < blk.end; ++s)
          if (a.e[s] != b.e[s]) return a.e[s] < b.e[s] ? -1 : 1;
        continue;
      }
      std::uint32_t da = 0, db = 0;
      if (blocks_.size() == 1) {
        da = a.deg;
        db = b.deg;
      } else {
        for (std::size_t s = blk.begin; s < blk.end; ++s) {
          da += a.e[s];
          db += b.e[s];
        }
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t s = blk.end; s-- > blk.begin;)
        if (a.e[s] != b.e[s]) return a.e[s] > b.e[s] ? -1 : 1;
    }
    return 0;
  }

  DMono one() const {
    DMono m;
    m.e.assign(size(), 0);
    return m;
  }

  DMono mul(const DMono& a, const DMono& b) const {
    DMono m;
    m.e.resize(size());
    for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = static_cast<Exp>(a.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    m.mask = a.mask | b.mask;
    return m;
  }

  static bool divides(const DMono& v, const DMono& w) {
    if (v.deg > w.deg || (v.mask & ~w.mask)) return false;
    for (std::size_t i = 0; i < v.e.size(); ++i)
      if (v.e[i] > w.e[i]) return false;
    return true;
  }

  /// w / v; requires v | w.
  static DMono div(const DMono& w, const DMono& v) {
    DMono m;
    m.e.resize(w.e.size());
    for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = static_cast<Exp>(w.e[i] - v.e[i]);
    m.refresh();
    return m;
  }

  static DMono lcm(const DMono& a, const DMono& b) {
    DMono m;
    m.e.resize(a.e.size());
    for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    m.refresh();
    return m;
  }

  static bool coprime(const DMono& a, const DMono& b) {
    if ((a.mask & b.mask) == 0) return true;
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  DMono to_dense(const Monomial& m) const {
    DMono d = one();
    for (const auto& f : m.factors()) {
      auto it = slot_of_.find(f.var);
      if (it == slot_of_.end())
        throw UsageError("variable " + f.var.to_string() + " is outside the ideal's universe");
      if (f.exp > 0xFFFF) throw CapExceeded("max-degree", "exponent overflow");
      d.e[it->second] = static_cast<Exp>(f.exp);
    }
    d.refresh();
    return d;
  }

  Monomial to_sparse(const DMono& d) const {
    std::vector<Monomial::Factor> fs;
    for (std::size_t i = 0; i < d.e.size(); ++i)
      if (d.e[i]) fs.push_back({slots_[i], d.e[i]});
    return Monomial(std::move(fs));
  }

  DPoly to_dense(const Polynomial& f) const {
    DPoly p;
    p.reserve(f.size());
    for (const auto& [m, c] : f.terms()) p.push_back({to_dense(m), c});
    sort(p);
    return p;
  }

  Polynomial to_sparse(const DPoly& p) const {
    Polynomial::TermMap t;
    for (const auto& term : p) t.emplace(to_sparse(term.m), term.c);
    return Polynomial(std::move(t));
  }

  void sort(DPoly& p) const {
    std::sort(p.begin(), p.end(),
              [&](const DTerm& a, const DTerm& b) { return compare(a.m, b.m) > 0; });
  }

  /// f[from..] - c*u*g.
  DPoly sub_mul(const DPoly& f, std::size_t from, const Rational& c, const DMono& u,
                const DPoly& g) const {
    DPoly out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    DMono pending;
    bool have = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have) {
        pending = mul(u, g[j].m);
        have = true;
      }
      int cmp = i == f.size() ? -1 : (!have ? 1 : compare(f[i].m, pending));
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(pending), -c * g[j].c});
        have = false;
        ++j;
      } else {
        Rational s = f[i].c - c * g[j].c;
        if (s != 0) out.push_back({f[i].m, std::move(s)});
        ++i;
        ++j;
        have = false;
      }
    }
    return out;
  }

  static void make_monic(DPoly& p) {
    if (p.empty() || p.front().c == 1) return;
    Rational inv = 1 / p.front().c;
    for (auto& t : p) t.c *= inv;
  }

  /// Remainder of f on division by `basis` (first divisor wins). With
  /// `full == false` stops at the first irreducible leading term.
  DPoly reduce(DPoly f, std::span<const DPoly* const> basis, bool full = true) const {
    DPoly r;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const DMono& lm = f[pos].m;
      const DPoly* hit = nullptr;
      for (const DPoly* g : basis)
        if (divides(g->front().m, lm)) {
          hit = g;
          break;
        }
      if (hit) {
        Rational c = f[pos].c / hit->front().c;
        f = sub_mul(f, pos, c, div(lm, hit->front().m), *hit);
        pos = 0;
      } else if (full) {
        r.push_back(std::move(f[pos]));
        ++pos;
      } else {
        r.insert(r.end(), std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(pos)),
                 std::make_move_iterator(f.end()));
        break;
      }
    }
    return r;
  }

private:
  struct Block {
    std::size_t begin, end;
    bool rev;
  };

  void plan(const TermOrder& order, std::vector<Variable> vars) {
    auto descending = [](std::vector<Variable>& vs) {
      std::sort(vs.begin(), vs.end(), std::greater<>());
    };
    const std::size_t begin = slots_.size();
    switch (order.kind()) {
    case TermOrder::Kind::lex:
    case TermOrder::Kind::deg_rev_lex:
      descending(vars);
      slots_.insert(slots_.end(), vars.begin(), vars.end());
      blocks_.push_back({begin, slots_.size(), order.kind() == TermOrder::Kind::deg_rev_lex});
      break;
    case TermOrder::Kind::permuted_lex:
      std::sort(vars.begin(), vars.end(), [&](const Variable& a, const Variable& b) {
        return act(order.sigma(), a) > act(order.sigma(), b);
      });
      slots_.insert(slots_.end(), vars.begin(), vars.end());
      blocks_.push_back({begin, slots_.size(), false});
      break;
    case TermOrder::Kind::block: {
      std::vector<Variable> elim, rest;
      for (auto& v : vars) (order.eliminated().count(v) ? elim : rest).push_back(v);
      if (!elim.empty()) {
        descending(elim);
        slots_.insert(slots_.end(), elim.begin(), elim.end());
        blocks_.push_back({begin, slots_.size(), false});
      }
      if (!rest.empty()) plan(order.inner(), std::move(rest));
      break;
    }
    }
  }

  std::vector<Variable> slots_;
  std::map<Variable, std::size_t> slot_of_;
  std::vector<Block> blocks_;
};

/// Buchberger completion with the Gebauer-Moeller pair update (which
/// subsumes the coprime-leading-monomial criterion) and the normal selection
/// strategy: the pair with the smallest lcm goes first.
class Buchberger {
public:
  Buchberger(const DenseRing& ring, GbLimits limits) : ring_(ring), limits_(limits) {}

  void add(DPoly f) {
    f = ring_.reduce(std::move(f), reducers());
    if (f.empty()) return;
    DenseRing::make_monic(f);
    insert(std::move(f));
  }

  std::vector<DPoly> run() {
    while (!pairs_.empty()) {
      Pair p = std::move(pairs_.back());
      pairs_.pop_back();
      DPoly s = spoly(p);
      s = ring_.reduce(std::move(s), reducers());
      if (s.empty()) continue;
      DenseRing::make_monic(s);
      insert(std::move(s));
    }
    return finish();
  }

  std::size_t pairs_created() const noexcept { return pairs_created_; }

private:
  struct Pair {
    std::size_t i, j;
    DMono lcm;
  };

  const std::vector<const DPoly*>& reducers() {
    if (reducers_dirty_) {
      reducers_.clear();
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (active_[i]) reducers_.push_back(&basis_[i]);
      reducers_dirty_ = false;
    }
    return reducers_;
  }

  bool pair_before(const Pair& a, const Pair& b) const {
    int c = ring_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  DPoly spoly(const Pair& p) const {
    const DPoly& f = basis_[p.i];
    const DPoly& g = basis_[p.j];
    DMono uf = DenseRing::div(p.lcm, f.front().m);
    DMono ug = DenseRing::div(p.lcm, g.front().m);
    DPoly a;
    a.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) a.push_back({ring_.mul(uf, f[k].m), f[k].c});
    // f and g are monic: S = uf*f - ug*g with the leading terms cancelled.
    DPoly gtail(g.begin() + 1, g.end());
    return ring_.sub_mul(a, 0, Rational(1), ug, gtail);
  }

  void insert(DPoly h) {
    const std::size_t hi = basis_.size();
    const DMono& lh = h.front().m;
    if (lh.deg > limits_.max_degree)
      throw CapExceeded("max-degree", "basis element of degree " + std::to_string(lh.deg) +
                                          " > " + std::to_string(limits_.max_degree));

    std::vector<Pair> cand;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) cand.push_back({i, hi, DenseRing::lcm(basis_[i].front().m, lh)});

    // Chain criterion among the new pairs.
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (DenseRing::coprime(basis_[cand[a].i].front().m, lh)) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (DenseRing::divides(cand[b].lcm, cand[a].lcm)) {
          // equal lcms: keep the first one only
          if (cand[b].lcm == cand[a].lcm && b > a) continue;
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] && !DenseRing::coprime(basis_[cand[a].i].front().m, lh))
        fresh.push_back(std::move(cand[a]));

    // Old pairs whose lcm is strictly covered through h.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (DenseRing::divides(lh, p.lcm)) {
        DMono l1 = DenseRing::lcm(basis_[p.i].front().m, lh);
        DMono l2 = DenseRing::lcm(basis_[p.j].front().m, lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      old.push_back(std::move(p));
    }

    pairs_created_ += fresh.size();
    if (pairs_created_ > limits_.max_pairs)
      throw CapExceeded("max-pairs", std::to_string(pairs_created_) + " critical pairs > " +
                                         std::to_string(limits_.max_pairs));

    // pairs_ is kept sorted with the next pair to process at the back.
    auto later = [&](const Pair& a, const Pair& b) { return pair_before(b, a); };
    std::sort(fresh.begin(), fresh.end(), later);
    pairs_.clear();
    std::merge(std::make_move_iterator(old.begin()), std::make_move_iterator(old.end()),
               std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()),
               std::back_inserter(pairs_), later);

    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i] && DenseRing::divides(lh, basis_[i].front().m)) active_[i] = false;
    basis_.push_back(std::move(h));
    active_.push_back(true);
    reducers_dirty_ = true;
  }

  std::vector<DPoly> finish() {
    std::vector<DPoly> g;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) g.push_back(basis_[i]);
    // Interreduce tails; leading monomials are already pairwise non-dividing.
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<const DPoly*> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(&g[j]);
      DPoly tail(g[i].begin() + 1, g[i].end());
      DPoly reduced = ring_.reduce(std::move(tail), others);
      reduced.insert(reduced.begin(), g[i].front());
      g[i] = std::move(reduced);
    }
    std::sort(g.begin(), g.end(), [&](const DPoly& a, const DPoly& b) {
      return ring_.compare(a.front().m, b.front().m) < 0;
    });
    return g;
  }

  const DenseRing& ring_;
  GbLimits limits_;
  std::vector<DPoly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<const DPoly*> reducers_;
  bool reducers_dirty_ = true;
  std::size_t pairs_created_ = 0;
};

inline std::vector<DPoly> groebner(const DenseRing& ring, std::span<const Polynomial> gens,
                                   GbLimits limits) {
  std::vector<DPoly> dense;
  dense.reserve(gens.size());
  for (const auto& f : gens)
    if (!f.is_zero()) dense.push_back(ring.to_dense(f));
  // Small generators first keeps the intermediate basis small.
  std::stable_sort(dense.begin(), dense.end(), [&](const DPoly& a, const DPoly& b) {
    return ring.compare(a.front().m, b.front().m) < 0;
  });
  Buchberger bb(ring, limits);
  for (auto& f : dense) bb.add(std::move(f));
  return bb.run();
}

} // namespace detail

/// An ideal of the polynomial ring over a finite variable universe, with a
/// term order. The reduced Groebner basis is computed on first use and shared
/// by all copies; once published it never changes.
class FiniteIdeal {
public:
  FiniteIdeal(std::vector<Polynomial> generators, std::vector<Variable> universe,
              TermOrder order = TermOrder::deg_rev_lex(), GbLimits limits = {})
      : generators_(std::move(generators)), order_(std::move(order)), limits_(limits) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    universe_ = std::move(universe);
    ring_ = std::make_shared<const detail::DenseRing>(universe_, order_);
    for (const auto& g : generators_)
      for (const auto& [m, c] : g.terms())
        for (const auto& f : m.factors())
          if (!ring_->contains(f.var))
            throw UsageError("generator uses " + f.var.to_string() +
                             ", which is outside the universe");
    state_ = std::make_shared<State>();
  }

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Variable>& universe() const noexcept { return universe_; }
  const TermOrder& order() const noexcept { return order_; }
  const GbLimits& limits() const noexcept { return limits_; }
  const detail::DenseRing& ring() const noexcept { return *ring_; }

  /// Reduced Groebner basis: monic, interreduced, ascending by leading monomial.
  const std::vector<Polynomial>& groebner() const& {
    compute();
    return state_->gb;
  }

  /// Copy for temporaries, so `for (auto& g : make_ideal().groebner())` is safe.
  std::vector<Polynomial> groebner() && {
    compute();
    return state_->gb;
  }

  const std::vector<detail::DPoly>& dense_groebner() const {
    compute();
    return state_->dense;
  }

  /// Ideal whose reduced basis is already known (e.g. read off an elimination).
  static FiniteIdeal with_basis(std::vector<Polynomial> reduced_basis,
                                std::vector<Variable> universe, TermOrder order,
                                GbLimits limits) {
    FiniteIdeal I(reduced_basis, std::move(universe), std::move(order), limits);
    std::call_once(I.state_->once, [&] {
      for (const auto& g : reduced_basis) I.state_->dense.push_back(I.ring_->to_dense(g));
      std::sort(I.state_->dense.begin(), I.state_->dense.end(),
                [&](const detail::DPoly& a, const detail::DPoly& b) {
                  return I.ring_->compare(a.front().m, b.front().m) < 0;
                });
      for (const auto& d : I.state_->dense) I.state_->gb.push_back(I.ring_->to_sparse(d));
    });
    return I;
  }

private:
  struct State {
    std::once_flag once;
    std::vector<detail::DPoly> dense;
    std::vector<Polynomial> gb;
  };

  void compute() const {
    std::call_once(state_->once, [this] {
      state_->dense = detail::groebner(*ring_, generators_, limits_);
      for (const auto& d : state_->dense) state_->gb.push_back(ring_->to_sparse(d));
    });
  }

  std::vector<Polynomial> generators_;
  std::vector<Variable> universe_;
  TermOrder order_;
  GbLimits limits_;
  std::shared_ptr<const detail::DenseRing> ring_;
  std::shared_ptr<State> state_;
};

inline const std::vector<Polynomial>& buchberger(const FiniteIdeal& I) { return I.groebner(); }

/// Remainder of f modulo the reduced Groebner basis of I.
inline Polynomial classical_normal_form(const Polynomial& f, const FiniteIdeal& I) {
  const auto& gb = I.dense_groebner();
  std::vector<const detail::DPoly*> reducers;
  for (const auto& g : gb) reducers.push_back(&g);
  return I.ring().to_sparse(I.ring().reduce(I.ring().to_dense(f), reducers));
}

inline bool membership(const Polynomial& f, const FiniteIdeal& I) {
  return classical_normal_form(f, I).is_zero();
}

inline bool contains_all(const FiniteIdeal& I, std::span<const Polynomial> polys) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const Polynomial& f) { return membership(f, I); });
}

inline bool ideal_equal(const FiniteIdeal& I, const FiniteIdeal& J) {
  if (I.universe() != J.universe()) throw UsageError("ideal_equal: universes differ");
  if (!(I.order() == J.order())) throw UsageError("ideal_equal: term orders differ");
  return I.groebner() == J.groebner();
}

/// I intersected with the subring on universe \ drop, through a block order
/// ranking the dropped variables (lex among themselves) above I's order.
inline FiniteIdeal eliminate(const FiniteIdeal& I, const std::set<Variable>& drop) {
  std::vector<Variable> kept;
  for (const auto& v : I.universe())
    if (!drop.count(v)) kept.push_back(v);
  if (kept.size() == I.universe().size()) return I;
  std::set<Variable> in_universe;
  for (const auto& v : I.universe())
    if (drop.count(v)) in_universe.insert(v);
  FiniteIdeal big(I.generators(), I.universe(), TermOrder::block(in_universe, I.order()),
                  I.limits());
  std::vector<Polynomial> survivors;
  for (const auto& g : big.groebner()) {
    bool clean = true;
    for (const auto& [m, c] : g.terms())
      for (const auto& f : m.factors()) clean = clean && !in_universe.count(f.var);
    if (clean) survivors.push_back(g);
  }
  return FiniteIdeal::with_basis(std::move(survivors), std::move(kept), I.order(), I.limits());
}

enum class UniversalMode { exhaustive, sampled };

struct UniversalCheckOptions {
  UniversalMode mode = UniversalMode::exhaustive;
  std::size_t samples = 32;
  std::uint64_t seed = 1;
  GbLimits limits;
};

struct UniversalCheckResult {
  bool holds = true;
  bool contained = true; // every element of B lies in the ideal
  std::size_t orders_checked = 0;
  std::optional<Permutation> counterexample;
};

/// Does `basis` contain a Groebner basis of the ideal generated by
/// `ideal_gens` (inside R_n) for every permuted lex order <=_sigma,
/// sigma in S_n? Exhaustive mode walks all n! orders (n <= 7).
inline UniversalCheckResult universal_gb_check(std::span<const Polynomial> basis,
                                               std::span<const Polynomial> ideal_gens, Index n,
                                               const UniversalCheckOptions& opt = {}) {
  std::size_t k = 0;
  for (const auto& f : basis) k = common_arity(k, f.x_arity());
  for (const auto& f : ideal_gens) k = common_arity(k, f.x_arity());
  if (k == 0) k = 1;
  if (opt.mode == UniversalMode::exhaustive && n > 7)
    throw UsageError("exhaustive universal check is limited to n <= 7");
  const auto universe = level_universe(n, k);
  std::vector<Polynomial> gens(ideal_gens.begin(), ideal_gens.end());

  UniversalCheckResult res;
  const FiniteIdeal plain(gens, universe, TermOrder::deg_rev_lex(), opt.limits);
  for (const auto& b : basis)
    if (!membership(b, plain)) {
      res.holds = res.contained = false;
      return res;
    }

  auto check = [&](const std::vector<Index>& images) {
    std::map<Index, Index> m;
    for (Index i = 0; i < n; ++i) m[i + 1] = images[i];
    Permutation sigma = Permutation::from_images(m);
    TermOrder order = TermOrder::permuted_lex(sigma);
    FiniteIdeal I(gens, universe, order, opt.limits);
    ++res.orders_checked;
    for (const auto& g : I.groebner()) {
      auto lm = *leading_monomial(g, order);
      bool covered = std::any_of(basis.begin(), basis.end(), [&](const Polynomial& b) {
        return !b.is_zero() && divides(*leading_monomial(b, order), lm);
      });
      if (!covered) {
        res.holds = false;
        res.counterexample = sigma;
        return false;
      }
    }
    return true;
  };

  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{1});
  if (opt.mode == UniversalMode::exhaustive) {
    do {
      if (!check(images)) return res;
    } while (std::next_permutation(images.begin(), images.end()));
  } else {
    std::mt19937_64 rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      std::shuffle(images.begin(), images.end(), rng);
      if (!check(images)) return res;
    }
  }
  return res;
}

} // namespace symideal
