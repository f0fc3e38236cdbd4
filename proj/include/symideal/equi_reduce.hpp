#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symideal/finite_gb.hpp"
#include "symideal/sym_order.hpp"
#include "symideal/symmetrize.hpp"

namespace symideal {

/// One rewriting step f -> f - coefficient * cofactor * sigma(generator).
struct ReductionStep {
  std::size_t generator_index = 0;
  Polynomial generator;
  Permutation sigma;
  Rational coefficient;
  Monomial cofactor;

  Polynomial summand() const {
    return act(sigma, generator).times_term(coefficient, cofactor);
  }
};

/// input == residue + sum of step summands.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial residue;
};

namespace detail {

inline void require_single_index(const Polynomial& f) {
  for (const auto& [m, c] : f.terms()) require_plain_indices(m);
}

/// The step that rewrites the term c*w of f, or nothing when no element of B
/// has a leading monomial below w in the cancellation ordering. Among the
/// applicable generators the lex-smallest leading monomial wins, ties by
/// position in B.
inline std::optional<ReductionStep> find_step(const Monomial& w, const Rational& c,
                                              std::span<const Polynomial> basis) {
  const TermOrder lex = TermOrder::lex();
  std::optional<ReductionStep> best;
  std::optional<Monomial> best_lm;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& g = basis[i];
    if (g.is_zero()) continue;
    auto lm = *leading_monomial(g, lex);
    if (best_lm && lex.compare(lm, *best_lm) >= 0) continue;
    auto wit = cancellation_witness(lm, w);
    if (!wit.related) continue;
    ReductionStep step;
    step.generator_index = i;
    step.generator = g;
    step.sigma = *wit.sigma;
    step.coefficient = c / g.coefficient(lm);
    step.cofactor = *wit.cofactor;
    best = std::move(step);
    best_lm = std::move(lm);
  }
  return best;
}

} // namespace detail

struct StepResult {
  Polynomial h;
  ReductionStep step;
};

/// One equivariant reduction step of f by B at lm(f) under lex, or nothing
/// when f is reduced with respect to B. When h != 0, lm(h) <_lex lm(f).
inline std::optional<StepResult> reduce_step(const Polynomial& f,
                                             std::span<const Polynomial> basis) {
  if (f.is_zero()) throw UsageError("reduce_step: the zero polynomial cannot be reduced");
  detail::require_single_index(f);
  for (const auto& g : basis) detail::require_single_index(g);
  const TermOrder lex = TermOrder::lex();
  auto lm = *leading_monomial(f, lex);
  auto step = detail::find_step(lm, f.coefficient(lm), basis);
  if (!step) return std::nullopt;
  Polynomial h = f - step->summand();
  return StepResult{std::move(h), std::move(*step)};
}

/// Repeated reduction steps until the leading term is irreducible. With
/// `tail`, irreducible leading terms are moved to the residue and reduction
/// continues on the remaining terms.
inline ReductionTrace normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                                  bool tail = false) {
  detail::require_single_index(f);
  for (const auto& g : basis) detail::require_single_index(g);
  const TermOrder lex = TermOrder::lex();
  ReductionTrace trace;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    auto lm = *leading_monomial(rest, lex);
    Rational c = rest.coefficient(lm);
    auto step = detail::find_step(lm, c, basis);
    if (step) {
      rest -= step->summand();
      trace.steps.push_back(std::move(*step));
    } else if (tail) {
      Polynomial lead = Polynomial::term(c, lm);
      trace.residue += lead;
      rest -= lead;
    } else {
      break;
    }
  }
  trace.residue += rest;
  return trace;
}

/// Re-expands the trace: input == residue + sum of summands, and no summand
/// has a leading monomial above lm(input).
inline bool verify_trace(const Polynomial& f, const ReductionTrace& trace) {
  const TermOrder lex = TermOrder::lex();
  Polynomial sum = trace.residue;
  const auto top = leading_monomial(f, lex);
  for (const auto& s : trace.steps) {
    Polynomial p = s.summand();
    if (p.is_zero()) return false;
    if (!top || lex.compare(*leading_monomial(p, lex), *top) > 0) return false;
    sum += p;
  }
  return sum == f;
}

struct TruncationCheck {
  bool holds = true;
  bool basis_in_ideal = true;       // B lies in L_n(gens)
  bool generators_reduce = true;    // every element of L_n(gens) reduces to 0 by B
  bool classical_gb_reduces = true; // the reduced lex basis of L_n(gens) reduces to 0 by B
  std::optional<Polynomial> offender;
};

/// Certificate that B is an equivariant Groebner basis of the S_n-invariant
/// ideal L_n(gens) of R_n: B lies in the ideal, and every element of the
/// symmetrized generating set and of the classical reduced lex basis has
/// normal form 0 by B. Since the ideal's lex leading monomials are divisible
/// by those of its classical basis, this gives lt(L_n(gens)) = lt(B) in R_n.
inline TruncationCheck truncation_gb_check(std::span<const Polynomial> basis,
                                           std::span<const Polynomial> gens, Index n,
                                           GbLimits limits = {}) {
  for (const auto& g : basis) detail::require_single_index(g);
  for (const auto& g : gens) detail::require_single_index(g);
  if (largest_index(basis) > n)
    throw UsageError("basis uses indices beyond n = " + std::to_string(n));
  TruncationCheck out;
  auto fail = [&](bool& flag, const Polynomial& p) {
    flag = false;
    out.holds = false;
    out.offender = p;
    return out;
  };
  const auto sym = symmetrize(gens, n, n);
  for (const auto& p : sym)
    if (!normal_form(p, basis).residue.is_zero()) return fail(out.generators_reduce, p);

  const FiniteIdeal I(sym, level_universe(n, 1), TermOrder::lex(), limits);
  for (const auto& b : basis)
    if (!membership(b, I)) return fail(out.basis_in_ideal, b);
  for (const auto& g : I.groebner())
    if (!normal_form(g, basis).residue.is_zero()) return fail(out.classical_gb_reduces, g);
  return out;
}

/// Drops every element whose leading monomial lies above another element's
/// in the cancellation ordering; of equal leading monomials the first stays.
inline std::vector<Polynomial> minimalize(std::span<const Polynomial> basis) {
  for (const auto& g : basis) detail::require_single_index(g);
  const TermOrder lex = TermOrder::lex();
  std::vector<std::optional<Monomial>> lms;
  for (const auto& g : basis) lms.push_back(leading_monomial(g, lex));
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!lms[i]) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || !lms[j]) continue;
      if (*lms[j] == *lms[i])
        redundant = j < i;
      else
        redundant = cancellation_related(*lms[j], *lms[i]);
    }
    if (!redundant) out.push_back(basis[i]);
  }
  return out;
}

} // namespace symideal
