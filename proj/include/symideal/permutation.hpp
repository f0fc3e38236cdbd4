#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symideal/variable.hpp"

namespace symideal {

/// Finite-support bijection of the positive integers. Only moved points are
/// stored; every other index is fixed.
class Permutation {
public:
  Permutation() = default;

  /// `images` must be a bijection of its key set onto its value set.
  static Permutation from_images(const std::map<Index, Index>& images) {
    std::set<Index> domain, image;
    for (auto [a, b] : images) {
      if (a == 0 || b == 0) throw UsageError("permutation indices must be positive");
      domain.insert(a);
      if (!image.insert(b).second) throw UsageError("permutation is not injective");
    }
    if (domain != image) throw UsageError("permutation does not map its support onto itself");
    Permutation p;
    for (auto [a, b] : images)
      if (a != b) p.moved_.emplace(a, b);
    return p;
  }

  static Permutation cycle(const std::vector<Index>& c) {
    std::map<Index, Index> m;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (m.count(c[i])) throw UsageError("cycle repeats index " + std::to_string(c[i]));
      m[c[i]] = c[(i + 1) % c.size()];
    }
    return from_images(m);
  }

  static Permutation from_cycles(const std::vector<std::vector<Index>>& cycles) {
    Permutation p;
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) p = cycle(*it) * p;
    return p;
  }

  /// Cycle notation: "()", "(1 2 3)", "(1,2)(3 4)".
  static Permutation parse(std::string_view text) {
    std::vector<std::vector<Index>> cycles;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) return {};
    while (i < text.size()) {
      if (text[i] != '(') throw UsageError("expected '(' in cycle notation: " + std::string(text));
      ++i;
      std::vector<Index> c;
      for (;;) {
        skip();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw UsageError("malformed cycle notation: " + std::string(text));
        Index v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + static_cast<Index>(text[i++] - '0');
        c.push_back(v);
      }
      if (!c.empty()) cycles.push_back(std::move(c));
      skip();
    }
    return from_cycles(cycles);
  }

  Index operator()(Index i) const {
    auto it = moved_.find(i);
    return it == moved_.end() ? i : it->second;
  }
  std::optional<Index> image(Index i) const { return (*this)(i); }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::map<Index, Index> m;
    for (auto [k, v] : b.moved_) m[k] = a(v);
    for (auto [k, v] : a.moved_)
      if (!b.moved_.count(k)) m[k] = v;
    Permutation p;
    for (auto [k, v] : m)
      if (k != v) p.moved_.emplace(k, v);
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    for (auto [k, v] : moved_) p.moved_.emplace(v, k);
    return p;
  }

  bool is_identity() const noexcept { return moved_.empty(); }
  const std::map<Index, Index>& moved() const noexcept { return moved_; }
  Index largest_moved() const noexcept { return moved_.empty() ? 0 : moved_.rbegin()->first; }

  /// Cycle notation with each cycle starting at its smallest element.
  std::string to_cycles() const {
    if (moved_.empty()) return "()";
    std::string out;
    std::set<Index> seen;
    for (auto [start, unused] : moved_) {
      (void)unused;
      if (seen.count(start)) continue;
      out += '(';
      Index cur = start;
      bool first = true;
      do {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(cur);
        seen.insert(cur);
        cur = (*this)(cur);
      } while (cur != start);
      out += ')';
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::map<Index, Index> moved_;
};

/// Injective map from a finite set of positive integers into the positive
/// integers. Acting on an index outside the domain is an error.
class Injection {
public:
  Injection() = default;

  static Injection from_images(std::map<Index, Index> images) {
    std::set<Index> seen;
    for (auto [a, b] : images) {
      if (a == 0 || b == 0) throw UsageError("injection indices must be positive");
      if (!seen.insert(b).second) throw UsageError("map is not injective");
    }
    Injection inj;
    inj.images_ = std::move(images);
    return inj;
  }

  std::optional<Index> image(Index i) const {
    auto it = images_.find(i);
    if (it == images_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<Index, Index>& images() const noexcept { return images_; }
  bool is_identity() const {
    for (auto [a, b] : images_)
      if (a != b) return false;
    return true;
  }

  /// "{1->3, 2->4}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : images_) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(a) + "->" + std::to_string(b);
    }
    return out + "}";
  }

  friend bool operator==(const Injection&, const Injection&) = default;

private:
  std::map<Index, Index> images_;
};

} // namespace symideal
