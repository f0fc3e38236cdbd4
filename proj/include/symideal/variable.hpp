#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "symideal/errors.hpp"

namespace symideal {

using Index = std::uint32_t;

enum class VarKind : std::uint8_t { x = 0, t = 1 };

/// An indeterminate x_u, u an ordered tuple of pairwise distinct positive
/// integers, or an auxiliary t_i.
///
/// Variables are ranked by kind (every x below every t), then
/// lexicographically on the index tuple. All term orders are built on this
/// ranking, so x_1 < x_2 < ... for arity one and x_(1,2) < x_(1,3) < x_(2,1)
/// for arity two.
class Variable {
public:
  using Entries = boost::container::small_vector<Index, 4>;

  Variable() : entries_{1} {}

  Variable(VarKind kind, Entries entries) : kind_(kind), entries_(std::move(entries)) {
    validate();
  }

  static Variable x(std::initializer_list<Index> entries) {
    return Variable(VarKind::x, Entries(entries.begin(), entries.end()));
  }
  static Variable x(const std::vector<Index>& entries) {
    return Variable(VarKind::x, Entries(entries.begin(), entries.end()));
  }
  static Variable t(Index i) { return Variable(VarKind::t, Entries{i}); }

  VarKind kind() const noexcept { return kind_; }
  bool is_x() const noexcept { return kind_ == VarKind::x; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t arity() const noexcept { return entries_.size(); }
  Index front() const noexcept { return entries_.front(); }
  Index largest_entry() const noexcept {
    return *std::max_element(entries_.begin(), entries_.end());
  }

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.kind_ == b.kind_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
  }

  std::string to_string() const {
    std::string out = kind_ == VarKind::x ? "x[" : "t[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    out += ']';
    return out;
  }

private:
  void validate() const {
    if (entries_.empty()) throw UsageError("variable needs at least one index");
    if (kind_ == VarKind::t && entries_.size() != 1)
      throw UsageError("auxiliary variables t[i] take exactly one index");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] == 0) throw UsageError("variable indices must be positive");
      for (std::size_t j = 0; j < i; ++j)
        if (entries_[i] == entries_[j])
          throw UsageError("variable index tuple has repeated entry " +
                           std::to_string(entries_[i]));
    }
  }

  VarKind kind_ = VarKind::x;
  Entries entries_;
};

} // namespace symideal
