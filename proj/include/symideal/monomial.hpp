#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symideal/variable.hpp"

namespace symideal {

/// An element of the free commutative monoid on the variables: a finite map
/// from Variable to a positive exponent. The empty map is the monomial 1.
class Monomial {
public:
  struct Factor {
    Variable var;
    std::uint32_t exp = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
    friend std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
      if (auto c = a.var <=> b.var; c != 0) return c;
      return a.exp <=> b.exp;
    }
  };

  Monomial() = default;

  /// Sorts by variable, merges repeated variables and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.var < b.var; });
    std::vector<Factor> merged;
    merged.reserve(factors_.size());
    for (auto& f : factors_) {
      if (f.exp == 0) continue;
      if (!merged.empty() && merged.back().var == f.var)
        merged.back().exp += f.exp;
      else
        merged.push_back(std::move(f));
    }
    factors_ = std::move(merged);
    compute_arity();
  }

  static Monomial of(const Variable& v, std::uint32_t exp = 1) {
    return Monomial(std::vector<Factor>{{v, exp}});
  }

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.exp;
    return d;
  }

  std::uint32_t exponent(const Variable& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Variable& x) { return f.var < x; });
    return (it != factors_.end() && it->var == v) ? it->exp : 0;
  }

  /// Arity of the x-variables occurring, 0 when there are none.
  std::size_t x_arity() const noexcept { return arity_; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Structural order for use as a container key; not a term order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

private:
  void compute_arity() {
    arity_ = 0;
    for (const auto& f : factors_) {
      if (!f.var.is_x()) continue;
      if (arity_ == 0)
        arity_ = f.var.arity();
      else if (arity_ != f.var.arity())
        throw UsageError("monomial mixes variables of arity " + std::to_string(arity_) +
                         " and " + std::to_string(f.var.arity()));
    }
  }

  std::vector<Factor> factors_; // ascending by variable
  std::size_t arity_ = 0;
};

/// Common x-arity of two operands; 0 stands for "no x-variables".
inline std::size_t common_arity(std::size_t a, std::size_t b) {
  if (a != 0 && b != 0 && a != b)
    throw UsageError("mixed arity: " + std::to_string(a) + " vs " + std::to_string(b));
  return a != 0 ? a : b;
}

inline Monomial product(const Monomial& v, const Monomial& w) {
  common_arity(v.x_arity(), w.x_arity());
  std::vector<Monomial::Factor> fs(v.factors().begin(), v.factors().end());
  fs.insert(fs.end(), w.factors().begin(), w.factors().end());
  return Monomial(std::move(fs));
}

/// The u with u*v == w, or nothing when v does not divide w.
inline std::optional<Monomial> quotient(const Monomial& v, const Monomial& w) {
  common_arity(v.x_arity(), w.x_arity());
  std::vector<Monomial::Factor> out;
  auto a = v.factors();
  std::size_t i = 0;
  for (const auto& f : w.factors()) {
    if (i < a.size() && a[i].var < f.var) return std::nullopt;
    if (i < a.size() && a[i].var == f.var) {
      if (a[i].exp > f.exp) return std::nullopt;
      if (a[i].exp < f.exp) out.push_back({f.var, f.exp - a[i].exp});
      ++i;
    } else {
      out.push_back(f);
    }
  }
  if (i != a.size()) return std::nullopt;
  return Monomial(std::move(out));
}

inline bool divides(const Monomial& v, const Monomial& w) { return quotient(v, w).has_value(); }

enum class Combine { product, quotient };

inline std::optional<Monomial> mono_combine(const Monomial& v, const Monomial& w, Combine mode) {
  if (mode == Combine::product) return product(v, w);
  return quotient(v, w);
}

namespace detail {
inline void require_plain_indices(const Monomial& w) {
  for (const auto& f : w.factors())
    if (!f.var.is_x() || f.var.arity() != 1)
      throw UsageError("operation is defined for single-index variables x[i] only, got " +
                       f.var.to_string());
}
} // namespace detail

/// |w|: the largest index i with x_i dividing w; nothing for w = 1.
inline std::optional<Index> max_index(const Monomial& w) {
  detail::require_plain_indices(w);
  if (w.is_one()) return std::nullopt;
  return w.factors().back().var.front();
}

/// Exponent sequence (w*(x_1), ..., w*(x_|w|)), zeros included.
inline std::vector<std::uint32_t> profile(const Monomial& w) {
  detail::require_plain_indices(w);
  if (w.is_one()) return {};
  std::vector<std::uint32_t> p(w.factors().back().var.front(), 0);
  for (const auto& f : w.factors()) p[f.var.front() - 1] = f.exp;
  return p;
}

/// Inverse of profile().
inline Monomial from_profile(std::span<const std::uint32_t> p) {
  std::vector<Monomial::Factor> fs;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i]) fs.push_back({Variable::x({static_cast<Index>(i + 1)}), p[i]});
  return Monomial(std::move(fs));
}

} // namespace symideal
