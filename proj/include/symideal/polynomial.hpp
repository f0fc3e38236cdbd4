#pragma once

#include <map>
#include <utility>

#include <gmpxx.h>

#include "symideal/monomial.hpp"

namespace symideal {

using Rational = mpq_class;

/// Finite map Monomial -> nonzero rational. Zero coefficients are never
/// stored, so the empty map is the zero polynomial.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;

  explicit Polynomial(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second.canonicalize();
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
    arity_ = 0;
    for (const auto& [m, c] : terms_) arity_ = common_arity(arity_, m.x_arity());
  }

  static Polynomial constant(const Rational& c) { return term(c, Monomial{}); }
  static Polynomial term(const Rational& c, const Monomial& m) {
    TermMap t;
    t.emplace(m, c);
    return Polynomial(std::move(t));
  }
  static Polynomial variable(const Variable& v) { return term(1, Monomial::of(v)); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t x_arity() const noexcept { return arity_; }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) { return accumulate(o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return accumulate(o, -1); }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial out = *this;
    for (auto& [m, a] : out.terms_) a *= c;
    return out;
  }

  /// c * u * this, for a single term c*u.
  Polynomial times_term(const Rational& c, const Monomial& u) const {
    if (c == 0) return {};
    TermMap t;
    for (const auto& [m, a] : terms_) t.emplace(product(u, m), a * c);
    return Polynomial(std::move(t));
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    common_arity(a.arity_, b.arity_);
    Polynomial out;
    for (const auto& [m, c] : b.terms_) out += a.times_term(c, m);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
  Polynomial& accumulate(const Polynomial& o, int sign) {
    arity_ = common_arity(arity_, o.arity_);
    for (const auto& [m, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(m, 0);
      if (sign > 0)
        it->second += c;
      else
        it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) arity_ = 0;
    return *this;
  }

  TermMap terms_;
  std::size_t arity_ = 0;
};

enum class ArithOp { add, subtract, multiply, scale };

/// Ring arithmetic dispatch. For `scale` the second operand must be constant.
inline Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b) {
  switch (op) {
  case ArithOp::add: return a + b;
  case ArithOp::subtract: return a - b;
  case ArithOp::multiply: return a * b;
  case ArithOp::scale:
    if (!b.is_constant()) throw UsageError("scale expects a constant factor");
    return a.scaled(b.coefficient(Monomial{}));
  }
  return {};
}

} // namespace symideal
