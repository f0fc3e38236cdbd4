#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "symideal/cli.hpp"

using namespace symideal;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> body_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

const char* kG = "x[1]^3*x[2]*x[3]^2 + x[3]^2 + x[1]^4*x[3]";
const char* kF = "x[1]*x[2]^2 + x[2] + x[1]^2";
} // namespace

TEST_CASE("order witness", "[cli]") {
  auto r = run({"order", "witness", "x[1]^2", "x[1]*x[2]^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "related: yes\nphi: {1->2}\nsigma: (1 2)\ncofactor: x[1]\nverified: yes\n");

  auto j = run({"--format", "json", "order", "witness", "x[1]*x[2]^2", "x[1]^3*x[2]*x[3]^2"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "symideal/1");
  CHECK(doc["sigma"] == "(1 2 3)");
  CHECK(doc["cofactor"] == "x[1]^3");
  CHECK(doc["verified"] == true);

  auto no = run({"order", "witness", "x[1]^2", "x[1]*x[2]"});
  CHECK(no.code == 1);
  CHECK(no.out.rfind("related: no", 0) == 0);
}

TEST_CASE("order cmp", "[cli]") {
  CHECK(run({"order", "cmp", "x[1]", "x[2]"}).out == "less\n");
  CHECK(run({"order", "cmp", "x[2]", "x[1]^9"}).out == "greater\n");
  CHECK(run({"order", "cmp", "x[1]*x[2]", "x[2]*x[1]"}).out == "equal\n");
}

TEST_CASE("reduce and normal-form", "[cli]") {
  auto r = run({"reduce", kG, "--basis", kF});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "step: generator 1, sigma (1 2 3), term x[1]^3\n"
        "result: x[3]^2 + x[1]^4*x[3] - x[1]^3*x[3] - x[1]^3*x[2]^2\n");
  auto nf = run({"normal-form", kG, "--basis", kF});
  CHECK(nf.code == 0);
  CHECK(nf.out.find("verified: yes") != std::string::npos);
  auto j = nlohmann::json::parse(run({"--format", "json", "normal-form", kG, "--basis", kF}).out);
  CHECK(parse_polynomial(j["residue"].get<std::string>()) ==
        parse_polynomial("x[1]^4*x[3] + x[3]^2 - x[1]^3*x[3] - x[1]^3*x[2]^2"));
}

TEST_CASE("symmetrize output round-trips", "[cli]") {
  auto r = run({"symmetrize", "--m", "4", "x[1]*x[2]-x[3]^2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# L_4: 12 polynomials\n", 0) == 0);
  auto lines = body_lines(r.out);
  REQUIRE(lines.size() == 12);
  auto expected = symmetrize(std::vector<Polynomial>{parse_polynomial("x[1]*x[2]-x[3]^2")}, 4);
  std::set<std::string> a, b;
  for (auto& l : lines) {
    auto p = parse_polynomial(l);
    CHECK(to_string(p) == l);
    a.insert(to_string(p));
  }
  for (auto& p : expected) b.insert(to_string(p));
  CHECK(a == b);
}

TEST_CASE("toric matrix and squarefree", "[cli]") {
  auto m = run({"toric", "matrix", "--n", "4", "--k", "2"});
  CHECK(m.out ==
        "   x12 x13 x14 x23 x24 x34\n"
        "t1   1   1   1   0   0   0\n"
        "t2   1   0   0   1   1   0\n"
        "t3   0   1   0   1   0   1\n"
        "t4   0   0   1   0   1   1\n");
  auto s = run({"toric", "squarefree", "--n", "4", "--k", "2"});
  auto lines = body_lines(s.out);
  CHECK(lines.size() == 8);
  for (auto& l : lines) CHECK(to_string(parse_polynomial(l), TermOrder::deg_rev_lex()) == l);
}

TEST_CASE("gb commands", "[cli]") {
  auto yes = run({"gb", "membership", "x[1]*x[2]", "--gens", "x[1]", "--n", "2"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "member: yes\nremainder: 0\n");
  CHECK(run({"gb", "membership", "1", "--gens", "x[1]"}).code == 1);
  CHECK(run({"gb", "truncate-check", "--basis", "x[1]", "--gens", "x[1]", "x[2]", "x[3]",
             "--n", "3"})
            .code == 0);
  auto u = run({"gb", "universal-check", "--basis", "x[1]", "--n", "2"});
  CHECK(u.code == 1);
  CHECK(u.out.find("holds: no") != std::string::npos);
  CHECK(run({"gb", "universal-check", "--basis", "x[1]", "x[2]", "x[3]", "--n", "3"}).code == 0);
  auto b = run({"gb", "buchberger", "x[1]", "x[1] + x[2]", "--n", "2"});
  CHECK(body_lines(b.out) == std::vector<std::string>{"x[1]", "x[2]"});
}

TEST_CASE("badseq and divides-upto-injection", "[cli]") {
  auto r = run({"badseq", "--from", "3", "--to", "5", "--scan"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pairs checked: 3, related: 0") != std::string::npos);
  auto d = run({"divides-upto-injection", "x[1,2]", "x[3,2]*x[3,4]"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("injection: {1->3, 2->2}\n", 0) == 0);
  CHECK(run({"divides-upto-injection", "x[1,2]*x[3,2]*x[3,4]",
             "x[1,2]*x[3,2]*x[4,3]*x[4,5]"})
            .code == 1);
}

TEST_CASE("chain files", "[cli]") {
  const std::string path = "test_cli_chain.json";
  {
    std::ofstream f(path);
    f << R"({"kind": "toric", "f": "t[1]*t[2]", "arity": 2})";
  }
  auto c = run({"chain", "check", path, "--lo", "2", "--hi", "4"});
  CHECK(c.code == 0);
  auto s = run({"--format", "json", "chain", "stabilize", path, "--hi", "5"});
  CHECK(s.code == 0);
  auto doc = nlohmann::json::parse(s.out);
  CHECK(doc["N"] == 4);
  CHECK_FALSE(doc["pairs"][0].contains("ms"));
  auto timed = nlohmann::json::parse(run({"--format", "json", "--timing", "chain", "stabilize",
                                          path, "--hi", "5"})
                                         .out);
  CHECK(timed["pairs"][0].contains("ms"));
  std::remove(path.c_str());
}

TEST_CASE("determinism", "[cli]") {
  std::vector<std::vector<std::string>> cmds{
      {"symmetrize", "--m", "4", "x[1]*x[2]-x[3]^2"},
      {"--format", "json", "toric", "experiment", "--k", "2", "--n-hi", "5"},
      {"toric", "kernel", "--f", "t[1]^2*t[2]", "--k", "2", "--n", "3"},
      {"gb", "universal-check", "--basis", "x[1]", "x[2]", "x[3]", "--n", "3", "--mode",
       "sampled", "--samples", "4", "--seed", "7"}};
  for (auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("exit codes and errors", "[cli]") {
  auto p = run({"order", "witness", "x[1", "x[2]"});
  CHECK(p.code == 2);
  CHECK(p.err.rfind("parse error:", 0) == 0);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"badseq", "--n", "2"}).code == 2);
  auto cap = run({"--max-pairs", "1", "gb", "buchberger", "x[1]^2*x[2] - x[3]",
                  "x[2]^2 - x[1]*x[3]", "x[3]^2 - x[1]", "--n", "3"});
  CHECK(cap.code == 3);
  CHECK(cap.err.rfind("error:", 0) == 0);
  CHECK(run({"toric", "experiment", "--k", "2", "--n-hi", "9"}).code == 3);
}
