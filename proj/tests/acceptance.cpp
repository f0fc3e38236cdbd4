// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symideal/symideal.hpp"

using namespace symideal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Check {
  Outcome* out;
  void operator()(bool cond, const std::string& what) const {
    if (!cond) {
      out->ok = false;
      if (!out->detail.empty()) out->detail += "; ";
      out->detail += "failed: " + what;
    }
  }
};

Polynomial poly(const char* s) { return parse_polynomial(s); }
Monomial mono(const char* s) { return parse_monomial(s); }
std::vector<Polynomial> polys(std::initializer_list<const char*> ss) {
  std::vector<Polynomial> out;
  for (auto s : ss) out.push_back(parse_polynomial(s));
  return out;
}

std::set<std::string> normalized(const std::vector<Polynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(to_string(sign_normalized(p, TermOrder::lex())));
  return out;
}

std::string ac1(const Check& check) {
  struct Case {
    const char *v, *w, *sigma, *u;
  };
  for (auto c : {Case{"x[1]^2", "x[1]*x[2]^2", "(1 2)", "x[1]"},
                 Case{"x[1]*x[2]^2", "x[1]^3*x[2]*x[3]^2", "(1 2 3)", "x[1]^3"}}) {
    auto r = cancellation_witness(mono(c.v), mono(c.w));
    check(r.related, std::string(c.v) + " related to " + c.w);
    if (!r.related) continue;
    check(r.sigma->to_cycles() == c.sigma, "sigma " + r.sigma->to_cycles());
    check(*r.cofactor == mono(c.u), "cofactor " + to_string(*r.cofactor));
    // expansion: u * sigma(v) == w
    check(product(*r.cofactor, act(*r.sigma, mono(c.v))) == mono(c.w), "expansion");
  }
  return "";
}

std::string ac2(const Check& check) {
  const auto f = poly("x[1]*x[2]^2 + x[2] + x[1]^2");
  const auto g = poly("x[1]^3*x[2]*x[3]^2 + x[3]^2 + x[1]^4*x[3]");
  std::vector<Polynomial> B{f};
  auto r = reduce_step(g, B);
  check(r.has_value(), "g reducible");
  if (!r) return "";
  check(r->h == poly("x[1]^4*x[3] + x[3]^2 - x[1]^3*x[3] - x[1]^3*x[2]^2"),
        "result " + to_string(r->h));
  ReductionTrace t{{r->step}, r->h};
  check(verify_trace(g, t), "verify_trace");
  return "";
}

std::string ac3(const Check& check) {
  auto L = symmetrize(polys({"x[1]*x[2] - x[3]^2"}), 4);
  auto printed = polys({"x[1]*x[2] - x[3]^2", "x[1]*x[2] - x[4]^2", "x[1]*x[3] - x[2]^2",
                        "x[1]*x[3] - x[4]^2", "x[1]*x[4] - x[3]^2", "x[1]*x[4] - x[2]^2",
                        "x[2]*x[3] - x[1]^2", "x[2]*x[3] - x[4]^2", "x[2]*x[4] - x[1]^2",
                        "x[2]*x[4] - x[3]^2", "x[3]*x[4] - x[1]^2", "x[3]*x[4] - x[2]^2"});
  check(L.size() == 12, "count " + std::to_string(L.size()));
  check(normalized(L) == normalized(printed), "set equality");
  auto U = level_universe(4, 1);
  check(ideal_equal(FiniteIdeal(L, U), FiniteIdeal(printed, U)), "ideal equality");
  return {"12 polynomials"};
}

std::string ac4(const Check& check) {
  const std::string grid =
      "   x12 x13 x14 x23 x24 x34\n"
      "t1   1   1   1   0   0   0\n"
      "t2   1   0   0   1   1   0\n"
      "t3   0   1   0   1   0   1\n"
      "t4   0   0   1   0   1   1\n";
  check(sorting_matrix(4, 2).to_text() == grid, "A4 grid");

  std::vector<Binding> b;
  for (auto& u : sorted_tuples(4, 2))
    b.emplace_back(Variable::x(u), Polynomial::variable(Variable::t(u[0])) *
                                       Polynomial::variable(Variable::t(u[1])));
  auto IA = kernel_by_elimination(b, TermOrder::deg_rev_lex());
  check(IA.groebner() ==
            polys({"x[1,3]*x[2,4] - x[1,2]*x[3,4]", "x[1,4]*x[2,3] - x[1,2]*x[3,4]"}),
        "reduced basis of I_A4 under grevlex");

  auto Q4 = kernel_by_elimination(toric_bindings(poly("t[1]*t[2]"), 2, 4));
  FiniteIdeal printed(polys({"x[1,3]*x[2,4] - x[1,2]*x[3,4]", "x[1,4]*x[2,3] - x[1,2]*x[3,4]",
                             "x[1,2] - x[2,1]", "x[1,3] - x[3,1]", "x[1,4] - x[4,1]",
                             "x[2,3] - x[3,2]", "x[2,4] - x[4,2]", "x[3,4] - x[4,3]"}),
                      level_universe(4, 2));
  check(ideal_equal(Q4, printed), "Q4 ideal equality");
  return {"order grevlex"};
}

std::string ac5(const Check& check) {
  std::vector<Monomial> s;
  for (Index n = 3; n <= 7; ++n) s.push_back(bad_sequence_element(n));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j, ++pairs)
      check(!injection_divisor(s[i], s[j]), "s_" + std::to_string(i + 3) + " divides s_" +
                                                std::to_string(j + 3) + " up to injection");
  check(!goodness_scan(s, Relation::injection), "goodness_scan found a pair");
  return {std::to_string(pairs) + " pairs, none related"};
}

std::string ac6(const Check& check) {
  auto Q3 = kernel_by_elimination(toric_bindings(poly("t[1]^2*t[2]"), 2, 3));
  auto rel = poly("x[1,2]^2*x[3,1] - x[1,3]^2*x[2,1]");
  check(membership(rel, Q3), "relation in Q3");
  auto img = act(Permutation::parse("(1 2 3)"), rel);
  check(img == poly("x[2,3]^2*x[1,2] - x[2,1]^2*x[3,2]"), "(1 2 3)-image");
  check(membership(img, Q3), "image in Q3");
  return "";
}

std::string ac7(const Check& check) {
  auto xs = [](Index n) {
    std::vector<Polynomial> out;
    for (Index i = 1; i <= n; ++i) out.push_back(Polynomial::variable(Variable::x({i})));
    return out;
  };
  std::vector<Polynomial> x1{poly("x[1]")};
  for (Index n = 1; n <= 6; ++n)
    check(truncation_gb_check(x1, xs(n), n).holds, "truncation n=" + std::to_string(n));
  std::size_t orders = 0;
  for (Index n = 1; n <= 5; ++n) {
    auto r = universal_gb_check(xs(n), xs(n), n);
    check(r.holds, "universal n=" + std::to_string(n));
    orders += r.orders_checked;
  }
  return {std::to_string(orders) + " orders checked"};
}

std::string ac8(const Check& check) {
  std::ostringstream evidence;
  for (auto [k, hi] : {std::pair<std::size_t, Index>{2, 6}, {3, 5}}) {
    auto r = squarefree_stabilization_experiment(k, hi);
    for (const auto& l : r.levels)
      check(l.agree, "k=" + std::to_string(k) + " n=" + std::to_string(l.n) + " ideal equality");
    check(r.M <= 4, "k=" + std::to_string(k) + " variable size " + std::to_string(r.M));
    check(r.failures_above_4k == 0, "k=" + std::to_string(k) + " failure above 4k");
    evidence << "k=" << k << " window " << k << ".." << hi << " M=" << r.M << " N=";
    if (r.stabilization.N)
      evidence << *r.stabilization.N;
    else
      evidence << "none";
    evidence << " pairs above 4k=" << r.pairs_above_4k << "; ";
  }
  evidence << "window evidence, not proof";
  return {evidence.str()};
}

std::string ac9(const Check& check) {
  const std::string cmd = std::string("\"") + PROPERTY_SUITES_PATH + "\" > property_suites.log 2>&1";
  check(std::system(cmd.c_str()) == 0, "property suites (see property_suites.log)");
  return {"8 suites"};
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_s;
  std::function<std::string(const Check&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "order witnesses for the x1^2 chain", 1, ac1},
      {"AC2", "one reduction step and its trace", 1, ac2},
      {"AC3", "symmetrize gives twelve generators at level four", 1, ac3},
      {"AC4", "sorting matrix, I_A4 and Q4", 10, ac4},
      {"AC5", "bad sequence s3..s7 under injection divisibility", 30, ac5},
      {"AC6", "Q3 memberships for f = t1^2 t2", 10, ac6},
      {"AC7", "truncation and universal Groebner checks", 30, ac7},
      {"AC8", "square-free generating sets at desk scale", 600, ac8},
      {"AC9", "property suites", 300, ac9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome state;
    Check check{&state};
    std::string info;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      info = c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) check(false, "runtime limit " + std::to_string(c.limit_s) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (state.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << secs << " s)";
    if (!info.empty()) line << " " << info;
    if (!state.ok) line << " " << state.detail;
    std::cout << line.str() << std::endl;
    failures += !state.ok;
  }
  std::cout << (failures ? "acceptance: FAILED " : "acceptance: all passed ") << failures << "/"
            << criteria.size() << " failing" << std::endl;
  return failures ? 1 : 0;
}
