#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace symideal;

namespace {
Polynomial poly(const char* s) { return parse_polynomial(s); }
std::vector<Polynomial> polys(std::initializer_list<const char*> ss) {
  std::vector<Polynomial> out;
  for (auto s : ss) out.push_back(parse_polynomial(s));
  return out;
}
} // namespace

TEST_CASE("symmetrize: twelve generators at level four", "[symmetrize]") {
  auto L = symmetrize(polys({"x[1]*x[2] - x[3]^2"}), 4);
  CHECK(L.size() == 12);
  auto printed = polys({"x[1]*x[2] - x[3]^2", "x[1]*x[2] - x[4]^2", "x[1]*x[3] - x[2]^2",
                        "x[1]*x[3] - x[4]^2", "x[1]*x[4] - x[3]^2", "x[1]*x[4] - x[2]^2",
                        "x[2]*x[3] - x[1]^2", "x[2]*x[3] - x[4]^2", "x[2]*x[4] - x[1]^2",
                        "x[2]*x[4] - x[3]^2", "x[3]*x[4] - x[1]^2", "x[3]*x[4] - x[2]^2"});
  std::set<std::string> a, b;
  for (auto& p : L) a.insert(to_string(sign_normalized(p, TermOrder::lex())));
  for (auto& p : printed) b.insert(to_string(sign_normalized(p, TermOrder::lex())));
  CHECK(a == b);
  // 24 raw images before deduplication
  std::size_t raw = 0;
  for_each_injection(index_support(poly("x[1]*x[2] - x[3]^2")), 4,
                     [&](const Injection&) { ++raw; });
  CHECK(raw == 24);
}

TEST_CASE("symmetrize: small cases and errors", "[symmetrize]") {
  CHECK(symmetrize(polys({"x[1]"}), 3) == polys({"x[1]", "x[2]", "x[3]"}));
  auto B = polys({"x[1]*x[2] - x[2]^2"});
  auto L = symmetrize(B, 2);
  for (auto& b : B)
    CHECK(std::find(L.begin(), L.end(), sign_normalized(b, TermOrder::lex())) != L.end());
  CHECK_THROWS_AS(symmetrize(polys({"x[3]"}), 2), UsageError);
  CHECK_THROWS_AS(symmetrize(polys({"x[1]"}), 2, 3), UsageError);
  CHECK(symmetrize(polys({"x[1,2]"}), 3).size() == 6);
}

TEST_CASE("project", "[project]") {
  CHECK(project(polys({"x[1]", "x[2]"}), 2, 1) == polys({"x[1]"}));
  CHECK(project({}, 3, 2).empty());
  // the elimination oracle: <x1, x2> cap R_1 by substituting x2 -> 0 leaves x1
  CHECK(project(polys({"x[1]*x[2] - x[3]^2"}), 3, 3) ==
        FiniteIdeal(symmetrize(polys({"x[1]*x[2] - x[3]^2"}), 3, 3, TermOrder::deg_rev_lex()),
                    level_universe(3, 1))
            .groebner());
  auto P = project(polys({"x[1] - x[2]", "x[3]^2"}), 3, 2);
  FiniteIdeal P2(P, level_universe(2, 1));
  CHECK(membership(poly("x[1] - x[2]"), P2));
  CHECK_THROWS_AS(project(polys({"x[1]"}), 2, 3), UsageError);
}

TEST_CASE("invariance_check", "[chain]") {
  auto toric = ChainSpec::toric(poly("t[1]*t[2]"), 2);
  CHECK(invariance_check(toric, 2, 5).holds);

  ChainSpec zero;
  zero.kind = ChainSpec::Explicit{{{1, {}}, {2, {}}, {3, {}}}};
  CHECK(invariance_check(zero, 1, 3).holds);

  auto constant = ChainSpec::constant(polys({"x[1]"}), 1, 1);
  auto r = invariance_check(constant, 1, 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.rows.size() == 1);
  CHECK_FALSE(r.rows[0].symmetrization);
  CHECK(r.rows[0].projection);
}

TEST_CASE("detect_stabilization", "[chain]") {
  auto orbit = ChainSpec::orbit(polys({"x[1]"}), 1, 1);
  auto r = detect_stabilization(orbit, 5);
  REQUIRE(r.N);
  CHECK(*r.N == 1);
  CHECK(r.pairs.size() == 10);

  ChainSpec zero;
  zero.first_level = 2;
  zero.kind = ChainSpec::Explicit{{{2, {}}, {3, {}}, {4, {}}}};
  CHECK(*detect_stabilization(zero, 4).N == 2);

  // Q_3 has no quadrics, so (2,3) is equal while (2,4) and (3,4) are not
  auto toric = ChainSpec::toric(poly("t[1]*t[2]"), 2);
  auto t = detect_stabilization(toric, 6);
  REQUIRE(t.N);
  CHECK(*t.N == 4);
  for (auto& p : t.pairs) CHECK(p.equal == (p.n >= 4 || p.m == 3));

  auto constant = ChainSpec::constant(polys({"x[1]"}), 1, 1);
  CHECK_FALSE(detect_stabilization(constant, 3).N);
}

TEST_CASE("variable_size", "[chain]") {
  CHECK(variable_size(poly("x[1,2]^5 + x[4,5]*x[2,3] + x[4,5]")) == 3);
  CHECK(variable_size(poly("7")) == 0);
  CHECK(variable_size(poly("x[1]*x[2] - x[3]^2")) == 3);
}

TEST_CASE("Lemma 4.2 on a small instance", "[symmetrize]") {
  auto B = polys({"x[1]^2 - x[2]"});
  auto B2 = polys({"x[1]^2 - x[2]", "x[1]^4 - x[2]^2"}); // same ideal in R_2
  auto U = level_universe(3, 1);
  CHECK(ideal_equal(FiniteIdeal(symmetrize(B, 3), U), FiniteIdeal(symmetrize(B2, 3), U)));
  // functoriality: L_3(L_2(B)) = L_3(B)
  CHECK(ideal_equal(FiniteIdeal(symmetrize(symmetrize(B, 2), 3), U),
                    FiniteIdeal(symmetrize(B, 3), U)));
}

TEST_CASE("truncation correspondence for toric chains", "[chain]") {
  for (const char* f : {"t[1]*t[2]", "t[1]^2*t[2]"}) {
    auto chain = ChainSpec::toric(poly(f), 2);
    for (Index n = 2; n <= 3; ++n)
      for (Index m = n + 1; m <= 4; ++m) {
        auto P = project(chain.ideal(m).groebner(), m, n);
        CHECK(ideal_equal(FiniteIdeal(P, level_universe(n, 2)), chain.ideal(n)));
      }
  }
}

TEST_CASE("variable_size is permutation invariant", "[chain]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_polynomial(rng, 5, 2, 3);
    CHECK(variable_size(act(oracle::random_permutation(rng, 6), g)) == variable_size(g));
  }
}
