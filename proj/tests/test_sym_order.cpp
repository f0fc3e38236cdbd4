#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace symideal;

namespace {
Monomial mono(const char* s) { return parse_monomial(s); }
} // namespace

TEST_CASE("higman_embed returns the leftmost greedy map", "[higman]") {
  auto phi = higman_embed(mono("x[1]^2"), mono("x[1]*x[2]^2"));
  REQUIRE(phi);
  CHECK(*phi == std::vector<Index>{2});
  // the oracle finds exactly this one embedding
  CHECK(oracle::all_embeddings(mono("x[1]^2"), mono("x[1]*x[2]^2")) ==
        std::vector<std::vector<Index>>{{2}});
  auto w = mono("x[1]^3*x[2]*x[3]^2");
  CHECK(*higman_embed(w, w) == std::vector<Index>{1, 2, 3});
  CHECK_FALSE(higman_embed(mono("x[1]*x[2]^2"), mono("x[1]^2")));
}

TEST_CASE("cancellation_witness reproduces the chain x1^2, x1x2^2, x1^3x2x3^2", "[witness]") {
  auto a = cancellation_witness(mono("x[1]^2"), mono("x[1]*x[2]^2"));
  REQUIRE(a.related);
  CHECK(a.sigma->to_cycles() == "(1 2)");
  CHECK(*a.cofactor == mono("x[1]"));

  auto b = cancellation_witness(mono("x[1]*x[2]^2"), mono("x[1]^3*x[2]*x[3]^2"));
  REQUIRE(b.related);
  CHECK(b.sigma->to_cycles() == "(1 2 3)");
  CHECK(*b.cofactor == mono("x[1]^3"));
  CHECK(product(*b.cofactor, act(*b.sigma, mono("x[1]*x[2]^2"))) == mono("x[1]^3*x[2]*x[3]^2"));

  auto c = cancellation_witness(mono("x[2]^3"), mono("x[2]^3"));
  REQUIRE(c.related);
  CHECK(c.sigma->is_identity());
  CHECK(c.cofactor->is_one());

  CHECK_FALSE(cancellation_witness(mono("x[2]"), mono("x[1]^5")).related); // lex fails
  CHECK_FALSE(cancellation_witness(mono("x[1]^2"), mono("x[1]*x[2]")).related);
}

TEST_CASE("witness permutations fix every index above |w|", "[witness]") {
  auto r = cancellation_witness(mono("x[1]"), mono("x[2]*x[4]^3"));
  REQUIRE(r.related);
  CHECK(r.sigma->largest_moved() <= 4);
}

TEST_CASE("injection_divisor", "[injection]") {
  auto pi = injection_divisor(mono("x[1,2]"), mono("x[3,2]*x[3,4]"));
  REQUIRE(pi);
  // lexicographically first injection; the oracle lists {1->3,2->2} and {1->3,2->4}
  CHECK(pi->to_string() == "{1->3, 2->2}");
  auto all = oracle::all_injection_divisors(mono("x[1,2]"), mono("x[3,2]*x[3,4]"));
  REQUIRE(all.size() == 2);
  CHECK(all[0].to_string() == "{1->3, 2->2}");
  CHECK(all[1].to_string() == "{1->3, 2->4}");

  auto s3 = bad_sequence_element(3), s4 = bad_sequence_element(4);
  CHECK_FALSE(injection_divisor(s3, s4));
  auto id = injection_divisor(s4, s4);
  REQUIRE(id);
  CHECK(id->is_identity());
}

TEST_CASE("goodness_scan", "[wqo]") {
  std::vector<Monomial> chain{mono("x[1]^2"), mono("x[1]*x[2]^2"), mono("x[1]^3*x[2]*x[3]^2")};
  auto p = goodness_scan(chain, Relation::higman);
  REQUIRE(p);
  CHECK(*p == std::pair<std::size_t, std::size_t>{1, 2});

  std::vector<Monomial> bad;
  for (Index n = 3; n <= 7; ++n) bad.push_back(bad_sequence_element(n));
  CHECK_FALSE(goodness_scan(bad, Relation::injection));

  std::vector<Monomial> twice{mono("x[1,2]"), mono("x[1,2]")};
  CHECK(*goodness_scan(twice, Relation::injection) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("bad sequence elements", "[wqo]") {
  CHECK(to_string(bad_sequence_element(3)) == "x[1,2]*x[3,2]*x[3,4]");
  CHECK(to_string(bad_sequence_element(4)) == "x[1,2]*x[3,2]*x[4,3]*x[4,5]");
  CHECK(to_string(bad_sequence_element(5)) == "x[1,2]*x[3,2]*x[4,3]*x[5,4]*x[5,6]");
  CHECK_THROWS_AS(bad_sequence_element(2), UsageError);
}

TEST_CASE("injection_divisor agrees with exhaustive enumeration", "[injection]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> idx(1, 4);
  auto random_pair_mono = [&](std::size_t len) {
    std::vector<Monomial::Factor> fs;
    for (std::size_t i = 0; i < len; ++i) {
      Index a = idx(rng), b = idx(rng);
      if (a == b) b = a % 4 + 1;
      fs.push_back({Variable::x({a, b}), 1});
    }
    return Monomial(fs);
  };
  for (int trial = 0; trial < 150; ++trial) {
    auto v = random_pair_mono(1 + trial % 3);
    auto w = random_pair_mono(2 + trial % 4);
    auto fast = injection_divisor(v, w);
    auto all = oracle::all_injection_divisors(v, w);
    REQUIRE(fast.has_value() == !all.empty());
    if (fast) CHECK(divides(act(*fast, v), w));
  }
}
