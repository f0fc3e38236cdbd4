#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symideal/action.hpp"

namespace symideal {

/// A term order on monomials, built on the variable ranking of Variable.
///
///  - lex:          compare exponent tuples starting from the largest variable
///                  (x_1 < x_2 < ..., so x_1^100 < x_2).
///  - deg_rev_lex:  total degree first; ties go to the monomial with the
///                  smaller exponent on the smallest differing variable.
///  - permuted_lex: v <= w iff sigma v <=_lex sigma w.
///  - block:        the eliminated variables compared by lex first; ties
///                  broken by `inner` on the remaining variables. Any monomial
///                  containing an eliminated variable is above every monomial
///                  that does not.
class TermOrder {
public:
  enum class Kind { lex, deg_rev_lex, permuted_lex, block };

  static TermOrder lex() { return TermOrder(Kind::lex); }
  static TermOrder deg_rev_lex() { return TermOrder(Kind::deg_rev_lex); }
  static TermOrder permuted_lex(Permutation sigma) {
    TermOrder o(Kind::permuted_lex);
    o.sigma_ = std::move(sigma);
    return o;
  }
  static TermOrder block(std::set<Variable> eliminated, const TermOrder& inner) {
    TermOrder o(Kind::block);
    o.eliminated_ = std::move(eliminated);
    o.inner_ = std::make_shared<const TermOrder>(inner);
    return o;
  }

  Kind kind() const noexcept { return kind_; }
  const Permutation& sigma() const noexcept { return sigma_; }
  const std::set<Variable>& eliminated() const noexcept { return eliminated_; }
  const TermOrder& inner() const { return *inner_; }

  std::strong_ordering compare(const Monomial& v, const Monomial& w) const {
    switch (kind_) {
    case Kind::lex: return compare_lex(v.factors(), w.factors());
    case Kind::deg_rev_lex: return compare_drl(v, w);
    case Kind::permuted_lex:
      return compare_lex(act(sigma_, v).factors(), act(sigma_, w).factors());
    case Kind::block: {
      auto [ve, vr] = split(v);
      auto [we, wr] = split(w);
      if (auto c = compare_lex(ve.factors(), we.factors()); c != 0) return c;
      return inner_->compare(vr, wr);
    }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& v, const Monomial& w) const { return compare(v, w) < 0; }

  std::string describe() const {
    switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::deg_rev_lex: return "grevlex";
    case Kind::permuted_lex: return "plex" + sigma_.to_cycles();
    case Kind::block: {
      std::string s = "block{";
      bool first = true;
      for (const auto& v : eliminated_) {
        if (!first) s += ',';
        first = false;
        s += v.to_string();
      }
      return s + "}>" + inner_->describe();
    }
    }
    return {};
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case Kind::permuted_lex: return a.sigma_ == b.sigma_;
    case Kind::block: return a.eliminated_ == b.eliminated_ && *a.inner_ == *b.inner_;
    default: return true;
    }
  }

private:
  explicit TermOrder(Kind k) : kind_(k) {}

  using Factors = std::span<const Monomial::Factor>;

  static std::strong_ordering compare_lex(Factors a, Factors b) {
    std::size_t i = a.size(), j = b.size();
    while (i > 0 && j > 0) {
      const auto& fa = a[i - 1];
      const auto& fb = b[j - 1];
      if (fa.var == fb.var) {
        if (fa.exp != fb.exp) return fa.exp <=> fb.exp;
        --i;
        --j;
      } else {
        return fa.var <=> fb.var;
      }
    }
    if (i > 0) return std::strong_ordering::greater;
    if (j > 0) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  static std::strong_ordering compare_drl(const Monomial& v, const Monomial& w) {
    if (auto c = v.degree() <=> w.degree(); c != 0) return c;
    auto a = v.factors();
    auto b = w.factors();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].var == b[j].var) {
        if (a[i].exp != b[j].exp) return b[j].exp <=> a[i].exp;
        ++i;
        ++j;
      } else {
        // The monomial carrying the smaller variable is the smaller one.
        return a[i].var < b[j].var ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::pair<Monomial, Monomial> split(const Monomial& w) const {
    std::vector<Monomial::Factor> e, r;
    for (const auto& f : w.factors()) (eliminated_.count(f.var) ? e : r).push_back(f);
    return {Monomial(std::move(e)), Monomial(std::move(r))};
  }

  Kind kind_;
  Permutation sigma_;
  std::set<Variable> eliminated_;
  std::shared_ptr<const TermOrder> inner_;
};

inline std::strong_ordering compare(const TermOrder& order, const Monomial& v, const Monomial& w) {
  return order.compare(v, w);
}

/// Terms of f sorted descending under `order`.
inline std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& f,
                                                               const TermOrder& order) {
  std::vector<std::pair<Monomial, Rational>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return ts;
}

inline std::optional<Monomial> leading_monomial(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) return std::nullopt;
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.compare(m, *best) > 0) best = &m;
  return *best;
}

inline Rational leading_coefficient(const Polynomial& f, const TermOrder& order) {
  auto lm = leading_monomial(f, order);
  return lm ? f.coefficient(*lm) : Rational(0);
}

/// lm, lc (lt = lc*lm) and, for single-index monomials, |lm| and its
/// exponent profile. For f = 0 lm is empty and lc is 0.
struct LeadingData {
  std::optional<Monomial> lm;
  Rational lc;
  std::optional<Index> max_index;
  std::vector<std::uint32_t> profile;
};

inline LeadingData leading_data(const Polynomial& f, const TermOrder& order) {
  LeadingData d;
  d.lm = leading_monomial(f, order);
  d.lc = d.lm ? f.coefficient(*d.lm) : Rational(0);
  if (d.lm && (d.lm->x_arity() <= 1)) {
    bool plain = true;
    for (const auto& fac : d.lm->factors()) plain = plain && fac.var.is_x();
    if (plain) {
      d.max_index = max_index(*d.lm);
      d.profile = profile(*d.lm);
    }
  }
  return d;
}

/// f scaled so that its leading coefficient under `order` is positive.
inline Polynomial sign_normalized(const Polynomial& f, const TermOrder& order) {
  return leading_coefficient(f, order) < 0 ? -f : f;
}

/// Deterministic total order on polynomials: compare the descending term
/// sequences monomial by monomial, then coefficient by coefficient.
inline bool canonical_less(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  auto a = sorted_terms(f, order);
  auto b = sorted_terms(g, order);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = order.compare(a[i].first, b[i].first); c != 0) return c < 0;
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

} // namespace symideal
