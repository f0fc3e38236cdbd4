#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "symideal/term_order.hpp"

namespace symideal {

inline std::string to_string(const Rational& c) { return c.get_str(); }

/// Factors in ascending variable order joined by '*'; "1" for the unit.
inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += f.var.to_string();
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

inline std::string term_to_string(const Rational& c, const Monomial& m) {
  if (m.is_one()) return to_string(c);
  if (c == 1) return to_string(m);
  if (c == -1) return "-" + to_string(m);
  return to_string(c) + "*" + to_string(m);
}

/// Canonical text: terms descending under `order`.
inline std::string to_string(const Polynomial& f, const TermOrder& order = TermOrder::lex()) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms(f, order)) {
    if (out.empty())
      out = term_to_string(c, m);
    else if (c < 0)
      out += " - " + term_to_string(-c, m);
    else
      out += " + " + term_to_string(c, m);
  }
  return out;
}

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power ('*' power)*
// power  := atom ('^' integer)?
// atom   := number ['/' number] | var '[' int (',' int)* ']' | '(' expr ')'
class PolynomialParser {
public:
  PolynomialParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at line " + std::to_string(line_) + ", column " +
                         std::to_string(pos_ + 1),
                     line_, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!eat('^')) return base;
    std::string e = digits();
    if (e.size() > 6) fail("exponent too large");
    Polynomial out = Polynomial::constant(1);
    for (unsigned long k = std::stoul(e); k > 0; --k) out = out * base;
    return out;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (eat('/')) {
        Rational den(digits());
        if (den == 0) fail("zero denominator");
        value /= den;
      }
      value.canonicalize();
      return Polynomial::constant(value);
    }
    if (c == 'x' || c == 't') {
      ++pos_;
      if (!eat('[')) fail("expected '[' after variable name");
      Variable::Entries entries;
      do {
        std::string d = digits();
        if (d.size() > 9) fail("index too large");
        entries.push_back(static_cast<Index>(std::stoul(d)));
      } while (eat(','));
      if (!eat(']')) fail("expected ']'");
      try {
        return Polynomial::variable(Variable(c == 'x' ? VarKind::x : VarKind::t, entries));
      } catch (const UsageError& e) {
        fail(e.what());
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::size_t line = 1) {
  try {
    return detail::PolynomialParser(text, line).parse();
  } catch (const UsageError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

/// A single monomial with coefficient 1, e.g. "x[1]^2*x[3]".
inline Monomial parse_monomial(std::string_view text, std::size_t line = 1) {
  Polynomial p = parse_polynomial(text, line);
  if (p.size() != 1 || p.terms().begin()->second != 1)
    throw ParseError("expected a monomial, got '" + std::string(text) + "'", line, 1);
  return p.terms().begin()->first;
}

} // namespace symideal
